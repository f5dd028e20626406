#pragma once

#include <memory>
#include <utility>

#include "univoque/algebraic.hpp"
#include "univoque/epseq.hpp"
#include "univoque/polynomial.hpp"

namespace univoque {

using BasePtr = std::shared_ptr<const AlgebraicReal>;

// Element of Q(q) for a base q, held as a rational-coefficient polynomial in q reduced
// modulo q's defining polynomial. Operands must share a structurally equal base.
// Equality and sign are exact (gcd-aware zero test), which stays correct when the
// defining polynomial is square-free but reducible.
class FieldElem {
public:
    FieldElem(BasePtr base, PolyQ coeffs);
    static FieldElem from_rational(BasePtr base, const Rat& r);
    static FieldElem generator(BasePtr base);  // the base q itself

    const BasePtr& base() const { return base_; }
    const PolyQ& coeffs() const { return coeffs_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool operator==(const FieldElem& o) const { return (*this - o).sign() == 0; }

    // q^k for any integer k (negative uses the exact inverse).
    FieldElem q_pow(long k) const;

    std::pair<Rat, Rat> approx(const Rat& eps) const;

private:
    BasePtr base_;
    PolyQ coeffs_;
    void check_same_base(const FieldElem& o) const;
};

// Base q in (1, oo) from the quasi-greedy expansion alpha of 1: the root of
// sum alpha_i q^-i = 1. Requires alpha infinite with every shifted tail <= alpha and
// first digit equal to alphabet_max; 0^inf is accepted only with allow_one (yielding 1).
AlgebraicReal base_from_alpha(const EpSeq& alpha, bool allow_one = false);

// Root in (1, alpha1 + 1] of sum_{i<=L} w_i x^-i (+ x^-L * tail/(x-1) when tail > 0) = 1.
// The left side is strictly decreasing, so the root is unique; used for truncation
// lower bounds and all-alpha1-tail upper bounds of limit bases.
AlgebraicReal root_of_digit_sum(const Word& w, int alpha1, int tail);

// ceil(q) - 1; requires q > 1.
int alpha1_of(const AlgebraicReal& q);

FieldElem value_of(const Word& w, const BasePtr& base);   // sum w_i q^-i
FieldElem value_of(const EpSeq& s, const BasePtr& base);  // sum s_i q^-i, exact

}  // namespace univoque
