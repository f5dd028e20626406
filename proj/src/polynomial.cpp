#include "univoque/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "univoque/errors.hpp"

namespace univoque {

PolyQ poly_normalize(PolyQ p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

PolyQ poly_from_z(const PolyZ& p) {
    PolyQ q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
    return poly_normalize(std::move(q));
}

PolyZ poly_primitive_z(const PolyQ& p0) {
    PolyQ p = poly_normalize(p0);
    if (p.empty()) return {};
    Int den = 1;
    for (const Rat& c : p) den = boost::multiprecision::lcm(den, rat_den(c));
    PolyZ z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) z[i] = rat_num(p[i]) * (den / rat_den(p[i]));
    Int content = 0;
    for (const Int& c : z) content = boost::multiprecision::gcd(content, c);
    if (content == 0) return {};
    if (z.back() < 0) content = -content;
    for (Int& c : z) c /= content;
    return z;
}

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_normalize(std::move(r));
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_normalize(std::move(r));
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_normalize(std::move(r));
}

PolyQ poly_scale(const PolyQ& a, const Rat& c) {
    if (c == 0) return {};
    PolyQ r = a;
    for (Rat& x : r) x *= c;
    return r;
}

std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b) {
    if (b.empty()) fail(errc::division_by_zero, "polynomial division by zero");
    PolyQ rem = poly_normalize(a);
    int db = poly_degree(b);
    if (poly_degree(rem) < db) return {{}, rem};
    PolyQ quo(rem.size() - b.size() + 1, Rat(0));
    for (int k = poly_degree(rem); k >= db; --k) {
        if (rem[static_cast<std::size_t>(k)] == 0) continue;
        Rat c = rem[static_cast<std::size_t>(k)] / b.back();
        quo[static_cast<std::size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    return {poly_normalize(std::move(quo)), poly_normalize(std::move(rem))};
}

PolyQ poly_derivative(const PolyQ& p) {
    if (p.size() <= 1) return {};
    PolyQ d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(Int(i));
    return poly_normalize(std::move(d));
}

namespace {
PolyQ make_monic(PolyQ p) {
    if (p.empty()) return p;
    Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}
}  // namespace

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    a = poly_normalize(std::move(a));
    b = poly_normalize(std::move(b));
    while (!b.empty()) {
        PolyQ r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

PolyQ poly_squarefree(const PolyQ& p) {
    if (poly_degree(p) < 1) return p;
    PolyQ g = poly_gcd(p, poly_derivative(p));
    if (poly_degree(g) < 1) return p;
    return poly_divmod(p, g).first;
}

Rat poly_eval(const PolyQ& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::pair<Rat, Rat> poly_eval_interval(const PolyQ& p, const Rat& lo, const Rat& hi) {
    Rat alo(0), ahi(0);
    for (std::size_t i = p.size(); i-- > 0;) {
        // [alo,ahi] * [lo,hi]: extremes among the four endpoint products.
        Rat p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
        alo = nlo + p[i];
        ahi = nhi + p[i];
    }
    return {alo, ahi};
}

std::pair<PolyQ, PolyQ> poly_half_ext_gcd(const PolyQ& a, const PolyQ& m) {
    PolyQ r0 = poly_normalize(a), r1 = poly_normalize(m);
    PolyQ u0 = {Rat(1)}, u1 = {};
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1);
        PolyQ u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.empty()) return {r0, u0};
    Rat lead = r0.back();
    for (Rat& c : r0) c /= lead;
    for (Rat& c : u0) c /= lead;
    return {r0, u0};
}

std::string poly_to_string(const PolyZ& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ']';
    return os.str();
}

PolyZ poly_z_from_string(const std::string& s) {
    std::string t = s;
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        fail(errc::parse_failure, "expected [c0,c1,...] in '" + s + "'");
    t = t.substr(1, t.size() - 2);
    PolyZ p;
    std::size_t pos = 0;
    while (pos <= t.size() && !t.empty()) {
        std::size_t comma = t.find(',', pos);
        std::string tok = t.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            p.emplace_back(tok);
        } catch (const std::exception&) {
            fail(errc::parse_failure, "bad integer coefficient '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

}  // namespace univoque
