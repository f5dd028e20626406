#include "univoque/field.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "univoque/errors.hpp"

namespace univoque {

namespace {
PolyQ reduce_mod(PolyQ e, const PolyZ& modulus) {
    PolyQ m = poly_from_z(modulus);
    if (poly_degree(e) >= poly_degree(m)) e = poly_divmod(e, m).second;
    return e;
}
}  // namespace

FieldElem::FieldElem(BasePtr base, PolyQ coeffs) : base_(std::move(base)) {
    if (!base_) fail(errc::out_of_range, "field element requires a base");
    coeffs_ = reduce_mod(poly_normalize(std::move(coeffs)), base_->poly());
}

FieldElem FieldElem::from_rational(BasePtr base, const Rat& r) {
    PolyQ c;
    if (r != 0) c = {r};
    return FieldElem(std::move(base), std::move(c));
}

FieldElem FieldElem::generator(BasePtr base) {
    return FieldElem(std::move(base), PolyQ{Rat(0), Rat(1)});
}

void FieldElem::check_same_base(const FieldElem& o) const {
    if (base_ != o.base_ && !(*base_ == *o.base_))
        fail(errc::alphabet_mismatch, "field elements over different bases");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_base(o);
    return FieldElem(base_, poly_add(coeffs_, o.coeffs_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same_base(o);
    return FieldElem(base_, poly_sub(coeffs_, o.coeffs_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_base(o);
    return FieldElem(base_, poly_mul(coeffs_, o.coeffs_));
}

FieldElem FieldElem::operator-() const { return FieldElem(base_, poly_scale(coeffs_, Rat(-1))); }

// The modulus may be reducible. Factors shared with a provably nonzero denominator
// cannot vanish at the base's root, so they are divided out before the extended
// Euclid step; the result still represents 1/e as a polynomial in q of degree below
// the defining polynomial's.
FieldElem FieldElem::inverse() const {
    if (sign() == 0) fail(errc::division_by_zero, "inverse of zero field element");
    PolyQ m = poly_from_z(base_->poly());
    for (;;) {
        PolyQ g = poly_gcd(coeffs_, m);
        if (poly_degree(g) < 1) break;
        m = poly_divmod(m, g).first;
    }
    auto [g, u] = poly_half_ext_gcd(coeffs_, m);
    if (poly_degree(g) != 0) fail(errc::division_by_zero, "inverse does not exist");
    PolyQ inv = poly_degree(u) >= poly_degree(m) ? poly_divmod(u, m).second : u;
    return FieldElem(base_, std::move(inv));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same_base(o);
    return *this * o.inverse();
}

int FieldElem::sign() const { return base_->sign_at(coeffs_); }

FieldElem FieldElem::q_pow(long k) const {
    FieldElem q = generator(base_);
    if (k < 0) {
        q = q.inverse();
        k = -k;
    }
    FieldElem acc = from_rational(base_, Rat(1));
    for (long i = 0; i < k; ++i) acc = acc * q;
    return acc;
}

std::pair<Rat, Rat> FieldElem::approx(const Rat& eps) const {
    AlgebraicReal w = *base_;
    for (;;) {
        auto [lo, hi] = w.is_rational()
                            ? std::pair<Rat, Rat>{poly_eval(coeffs_, w.lo()), poly_eval(coeffs_, w.lo())}
                            : poly_eval_interval(coeffs_, w.lo(), w.hi());
        if (hi - lo < eps) return {lo, hi};
        w = w.refined();
    }
}

int alpha1_of(const AlgebraicReal& q) {
    if (compare(q, Rat(1)) != std::strong_ordering::greater)
        fail(errc::out_of_range, "base must exceed 1");
    return static_cast<int>(q.ceil_value()) - 1;
}

namespace {

// Exact rational value of sum_{i<=L} w_i x^-i + x^-L * (tail x)/(x-1)... computed as
// sum_{i} w_i x^-i + tail * x^-L / (x - 1), minus 1. Valid for rational x > 1.
Rat digit_sum_minus_one(const Word& w, int tail, const Rat& x) {
    Rat acc(0);
    Rat xinv = Rat(1) / x;
    Rat p(1);
    for (int d : w) {
        p *= xinv;
        acc += Rat(d) * p;
    }
    if (tail > 0) acc += Rat(tail) * p / (x - 1);
    return acc - 1;
}

// Same with an eventually periodic tail: pre then (per)^inf.
Rat epseq_sum_minus_one(const EpSeq& s, const Rat& x) {
    Rat acc(0);
    Rat xinv = Rat(1) / x;
    Rat p(1);
    for (int d : s.preperiod()) {
        p *= xinv;
        acc += Rat(d) * p;
    }
    // periodic part: x^-L * (sum_j w_j x^(p-j)) / (x^p - 1)
    Rat num(0);
    Rat xp(1);
    for (std::size_t j = s.period().size(); j-- > 0;) {
        num += Rat(s.period()[j]) * xp;
        xp *= x;
    }
    acc += p * num / (xp - 1);  // xp == x^|per| after the loop
    return acc - 1;
}

// Probes alpha1 + 2^-t downward for a positive value of the strictly decreasing f,
// then hands the bracket to AlgebraicReal. f(hi) < 0 must hold (checked by caller
// logic: digit content not identically alpha1).
AlgebraicReal isolate_decreasing(const PolyZ& P, int alpha1,
                                 const std::function<Rat(const Rat&)>& f_minus) {
    Rat hi = Rat(alpha1 + 1);
    Rat fhi = f_minus(hi);
    if (fhi == 0) return AlgebraicReal(P, hi, hi);
    if (fhi > 0) fail(errc::out_of_range, "digit sum root exceeds alphabet bound");
    for (Rat step(1, 2);; step /= 2) {
        Rat lo = Rat(alpha1) + step;
        Rat flo = f_minus(lo);
        if (flo == 0) return AlgebraicReal(P, lo, lo);
        if (flo > 0) return AlgebraicReal(P, lo, hi);
        hi = lo;  // root lies below this probe; tighten the bracket
    }
}

}  // namespace

AlgebraicReal base_from_alpha(const EpSeq& alpha, bool allow_one) {
    if (alpha.is_zero()) {
        if (allow_one) return AlgebraicReal::from_rational(Rat(1));
        fail(errc::not_quasi_greedy_alpha, "0^inf corresponds to the excluded base 1");
    }
    if (!alpha.is_infinite())
        fail(errc::not_quasi_greedy_alpha, "alpha must have infinitely many nonzero digits");
    if (alpha.digit(1) != alpha.alphabet_max())
        fail(errc::not_quasi_greedy_alpha, "alpha's first digit must equal its alphabet bound");
    if (!all_shifts_le(alpha, alpha, /*strict=*/false, 1))
        fail(errc::not_quasi_greedy_alpha, "alpha violates the shift condition");
    int a1 = alpha.digit(1);
    if (alpha.preperiod().empty() && alpha.period().size() == 1)
        return AlgebraicReal::from_rational(Rat(a1 + 1));  // alpha = a1^inf, integer base

    // Clear denominators of sum alpha_i x^-i = 1 over x^L (x^p - 1):
    //   x^(L+p) - x^L - sum_i u_i (x^(L+p-i) - x^(L-i)) - sum_j w_j x^(p-j) = 0.
    std::size_t L = alpha.preperiod().size(), p = alpha.period().size();
    PolyQ P(L + p + 1, Rat(0));
    P[L + p] += 1;
    P[L] -= 1;
    for (std::size_t i = 1; i <= L; ++i) {
        P[L + p - i] -= alpha.preperiod()[i - 1];
        P[L - i] += alpha.preperiod()[i - 1];
    }
    for (std::size_t j = 1; j <= p; ++j) P[p - j] -= alpha.period()[j - 1];
    PolyZ Pz = poly_primitive_z(P);
    return isolate_decreasing(Pz, a1, [&](const Rat& x) { return epseq_sum_minus_one(alpha, x); });
}

AlgebraicReal root_of_digit_sum(const Word& w, int alpha1, int tail) {
    bool any = tail > 0;
    for (int d : w) {
        if (d < 0 || d > alpha1) fail(errc::alphabet_mismatch, "digit outside alphabet");
        if (d > 0) any = true;
    }
    if (!any) fail(errc::out_of_range, "digit sum is identically zero");
    std::size_t L = w.size();
    PolyQ P;
    if (tail == 0) {
        // x^L - sum w_i x^(L-i)
        P.assign(L + 1, Rat(0));
        P[L] = 1;
        for (std::size_t i = 1; i <= L; ++i) P[L - i] -= w[i - 1];
    } else {
        // multiply by x^L (x-1): x^(L+1) - x^L - sum w_i (x^(L+1-i) - x^(L-i)) - tail
        P.assign(L + 2, Rat(0));
        P[L + 1] = 1;
        P[L] -= 1;
        for (std::size_t i = 1; i <= L; ++i) {
            P[L + 1 - i] -= w[i - 1];
            P[L - i] += w[i - 1];
        }
        P[0] -= tail;
    }
    PolyZ Pz = poly_primitive_z(P);
    return isolate_decreasing(Pz, alpha1,
                              [&](const Rat& x) { return digit_sum_minus_one(w, tail, x); });
}

FieldElem value_of(const Word& w, const BasePtr& base) {
    FieldElem qinv = FieldElem::generator(base).inverse();
    FieldElem acc = FieldElem::from_rational(base, Rat(0));
    FieldElem p = FieldElem::from_rational(base, Rat(1));
    for (int d : w) {
        p = p * qinv;
        if (d != 0) acc = acc + FieldElem::from_rational(base, Rat(d)) * p;
    }
    return acc;
}

FieldElem value_of(const EpSeq& s, const BasePtr& base) {
    if (s.is_zero()) return FieldElem::from_rational(base, Rat(0));
    FieldElem acc = value_of(s.preperiod(), base);
    FieldElem q = FieldElem::generator(base);
    // periodic tail: q^-L * (sum_j w_j q^(p-j)) / (q^p - 1)
    FieldElem num = FieldElem::from_rational(base, Rat(0));
    FieldElem qp = FieldElem::from_rational(base, Rat(1));
    for (std::size_t j = s.period().size(); j-- > 0;) {
        if (s.period()[j] != 0)
            num = num + FieldElem::from_rational(base, Rat(s.period()[j])) * qp;
        qp = qp * q;
    }
    FieldElem den = qp - FieldElem::from_rational(base, Rat(1));
    FieldElem qinvL = q.q_pow(-static_cast<long>(s.preperiod().size()));
    return acc + qinvL * num / den;
}

}  // namespace univoque
