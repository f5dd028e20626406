#include "univoque/algebraic.hpp"

#include <sstream>

#include "univoque/errors.hpp"

namespace univoque {

namespace {

int sgn(const Rat& r) { return r == 0 ? 0 : (r < 0 ? -1 : 1); }

// Divide out a linear factor (x - root) when the represented number provably differs
// from `root` (root outside the closed interval hull). Keeps polynomials free of the
// parasitic 0/±1 roots that denominator-clearing introduces.
PolyQ strip_linear(PolyQ p, const Rat& root, const Rat& lo, const Rat& hi) {
    PolyQ lin = {Rat(-root), Rat(1)};
    while (poly_degree(p) >= 1 && poly_eval(p, root) == 0 && (root < lo || root > hi))
        p = poly_divmod(p, lin).first;
    return p;
}

constexpr int kMaxRefine = 200000;  // guards against logic bugs, not a tuning knob

}  // namespace

AlgebraicReal::AlgebraicReal(PolyZ poly, Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    PolyQ p = poly_squarefree(poly_from_z(poly));
    if (poly_is_zero(p) || poly_degree(p) < 1)
        fail(errc::invalid_interval, "defining polynomial must be nonconstant");
    if (lo_ > hi_) fail(errc::invalid_interval, "interval endpoints out of order");
    p = strip_linear(std::move(p), Rat(0), lo_, hi_);
    p = strip_linear(std::move(p), Rat(1), lo_, hi_);
    p = strip_linear(std::move(p), Rat(-1), lo_, hi_);
    poly_ = poly_primitive_z(p);
    if (static_cast<int>(poly_.size()) - 1 < 1)
        fail(errc::invalid_interval, "no root of the polynomial lies in the interval");
    PolyQ pq = poly_from_z(poly_);
    if (lo_ == hi_) {
        if (poly_eval(pq, lo_) != 0)
            fail(errc::invalid_interval, "point interval must sit on a root");
        return;
    }
    Rat vlo = poly_eval(pq, lo_), vhi = poly_eval(pq, hi_);
    if (vlo == 0 || vhi == 0)
        fail(errc::invalid_interval, "open isolating interval may not have roots at endpoints");
    if (sgn(vlo) * sgn(vhi) > 0)
        fail(errc::invalid_interval, "no sign change over the isolating interval");
}

AlgebraicReal AlgebraicReal::from_rational(const Rat& r) {
    PolyZ p = {-rat_num(r), rat_den(r)};
    return AlgebraicReal(std::move(p), r, r);
}

void AlgebraicReal::bisect_in_place() {
    if (lo_ == hi_) return;
    PolyQ pq = poly_from_z(poly_);
    Rat mid = (lo_ + hi_) / 2;
    Rat vm = poly_eval(pq, mid);
    if (vm == 0) {
        lo_ = hi_ = mid;
        return;
    }
    if (sgn(poly_eval(pq, lo_)) * sgn(vm) < 0)
        hi_ = mid;
    else
        lo_ = mid;
}

AlgebraicReal AlgebraicReal::refined() const {
    AlgebraicReal r = *this;
    r.bisect_in_place();
    return r;
}

AlgebraicReal AlgebraicReal::refined_below(const Rat& eps) const {
    AlgebraicReal r = *this;
    int guard = 0;
    while (r.lo_ != r.hi_ && r.hi_ - r.lo_ >= eps) {
        r.bisect_in_place();
        if (++guard > kMaxRefine) fail(errc::undecided_at_precision, "refinement stalled");
    }
    return r;
}

std::pair<Rat, Rat> AlgebraicReal::approx(const Rat& eps) const {
    AlgebraicReal r = refined_below(eps);
    return {r.lo_, r.hi_};
}

// Zero test: e(r) = 0 iff g := gcd(e, P) vanishes at r. g | P, P square-free, and the
// isolating interval's endpoints are never roots of P (hence not of g), so once the
// interval isolates r among g's roots, a sign change of g across the endpoints appears
// iff g(r) = 0. Nonzero is certified by interval evaluation shrinking away from 0.
// One of the two certificates must eventually fire, so the loop terminates.
int AlgebraicReal::sign_at(const PolyQ& e) const {
    if (poly_is_zero(e)) return 0;
    if (is_rational()) return sgn(poly_eval(e, lo_));
    AlgebraicReal w = *this;
    PolyQ g;  // computed lazily: most calls resolve by interval evaluation alone
    bool have_g = false;
    for (int round = 0;; ++round) {
        if (w.is_rational()) return sgn(poly_eval(e, w.lo_));
        auto [elo, ehi] = poly_eval_interval(e, w.lo_, w.hi_);
        if (elo > 0) return 1;
        if (ehi < 0) return -1;
        if (round >= 2 && !have_g) {
            g = poly_gcd(e, poly_from_z(poly_));
            have_g = true;
        }
        if (have_g && poly_degree(g) >= 1) {
            if (sgn(poly_eval(g, w.lo_)) * sgn(poly_eval(g, w.hi_)) < 0) return 0;
        }
        w.bisect_in_place();
        if (round > kMaxRefine) fail(errc::undecided_at_precision, "sign refinement stalled");
    }
}

Int AlgebraicReal::ceil_value() const {
    if (is_rational()) return rat_ceil(lo_);
    AlgebraicReal w = *this;
    PolyQ pq = poly_from_z(poly_);
    for (int round = 0;; ++round) {
        if (w.is_rational()) return rat_ceil(w.lo_);
        if (rat_floor(w.lo_) == rat_floor(w.hi_)) {
            // both endpoints in [k, k+1) and the root is interior, so it lies in (k, k+1)
            return rat_floor(w.lo_) + 1;
        }
        Rat k(rat_floor(w.hi_));
        if (w.lo_ < k && k < w.hi_ && poly_eval(pq, k) == 0) return rat_ceil(k);
        w.bisect_in_place();
        if (round > kMaxRefine) fail(errc::undecided_at_precision, "ceil refinement stalled");
    }
}

std::strong_ordering compare(const AlgebraicReal& a, const Rat& r) {
    if (a.is_rational()) return rat_cmp(a.rational_value(), r);
    int s = a.sign_at({Rat(-r), Rat(1)});  // sign of (root - r)
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Distinct roots separate by interval refinement; equal roots are certified by a sign
// change of gcd(Pa, Pb) over the intersection (a root there is simultaneously the unique
// root of each polynomial in its own interval). Endpoints are never roots of either
// polynomial, so the gcd test is always meaningful.
namespace {
std::strong_ordering flip(std::strong_ordering c) {
    if (c == std::strong_ordering::less) return std::strong_ordering::greater;
    if (c == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}
}  // namespace

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (b.is_rational()) return compare(a, b.rational_value());
    if (a.is_rational()) return flip(compare(b, a.rational_value()));
    AlgebraicReal x = a, y = b;
    PolyQ g = poly_gcd(poly_from_z(x.poly()), poly_from_z(y.poly()));
    auto sgn_at = [](const PolyQ& p, const Rat& v) {
        Rat r = poly_eval(p, v);
        return r == 0 ? 0 : (r < 0 ? -1 : 1);
    };
    for (int round = 0;; ++round) {
        if (y.is_rational()) return compare(x, y.rational_value());
        if (x.is_rational()) return flip(compare(y, x.rational_value()));
        if (x.hi() <= y.lo()) return std::strong_ordering::less;
        if (y.hi() <= x.lo()) return std::strong_ordering::greater;
        if (poly_degree(g) >= 1) {
            Rat jlo = std::max(x.lo(), y.lo()), jhi = std::min(x.hi(), y.hi());
            if (jlo < jhi && sgn_at(g, jlo) * sgn_at(g, jhi) < 0) return std::strong_ordering::equal;
        }
        x = x.refined();
        y = y.refined();
        if (round > kMaxRefine) fail(errc::undecided_at_precision, "comparison stalled");
    }
}

std::string to_string(const AlgebraicReal& a) {
    std::ostringstream os;
    if (a.is_rational()) {
        os << rat_to_string(a.rational_value());
    } else {
        os << poly_to_string(a.poly()) << " @ (" << rat_to_string(a.lo()) << ", "
           << rat_to_string(a.hi()) << ")";
    }
    return os.str();
}

}  // namespace univoque
