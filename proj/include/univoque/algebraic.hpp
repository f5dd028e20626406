#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "univoque/polynomial.hpp"
#include "univoque/rational.hpp"

namespace univoque {

// A real algebraic number: square-free integer polynomial plus an isolating interval.
// Either lo == hi (the number is the rational lo, a root of the polynomial) or
// lo < hi with p(lo)*p(hi) < 0 and exactly one root inside (lo, hi). Values are
// immutable; refinement returns new objects.
class AlgebraicReal {
public:
    AlgebraicReal(PolyZ poly, Rat lo, Rat hi);
    static AlgebraicReal from_rational(const Rat& r);

    const PolyZ& poly() const { return poly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }

    bool is_rational() const { return lo_ == hi_; }
    const Rat& rational_value() const { return lo_; }

    AlgebraicReal refined() const;                    // one bisection step
    AlgebraicReal refined_below(const Rat& eps) const;  // width < eps (or exact point)
    std::pair<Rat, Rat> approx(const Rat& eps) const;

    // Exact sign of e(r) where r is this number. Decides zero by a gcd argument,
    // nonzero by interval refinement; terminates for every e (see sign_at in the
    // implementation for the argument).
    int sign_at(const PolyQ& e) const;

    Int ceil_value() const;  // exact ceiling of the represented number

    bool operator==(const AlgebraicReal& o) const {
        return poly_ == o.poly_ && lo_ == o.lo_ && hi_ == o.hi_;
    }

private:
    PolyZ poly_;
    Rat lo_, hi_;
    void bisect_in_place();
};

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b);
std::strong_ordering compare(const AlgebraicReal& a, const Rat& r);

std::string to_string(const AlgebraicReal& a);

}  // namespace univoque
