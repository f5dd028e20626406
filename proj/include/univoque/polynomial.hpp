#pragma once

#include <string>
#include <utility>
#include <vector>

#include "univoque/rational.hpp"

namespace univoque {

// Dense univariate polynomials, ascending coefficients, no trailing zero (zero poly = {}).
using PolyQ = std::vector<Rat>;
using PolyZ = std::vector<Int>;

PolyQ poly_normalize(PolyQ p);
inline int poly_degree(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }
inline bool poly_is_zero(const PolyQ& p) { return p.empty(); }

PolyQ poly_from_z(const PolyZ& p);
// Clears denominators, divides by content, makes the leading coefficient positive.
PolyZ poly_primitive_z(const PolyQ& p);

PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const PolyQ& a, const Rat& c);
// quotient/remainder; divisor must be nonzero.
std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b);
PolyQ poly_derivative(const PolyQ& p);
// Monic gcd over Q; gcd(0,0) = 0.
PolyQ poly_gcd(PolyQ a, PolyQ b);
PolyQ poly_squarefree(const PolyQ& p);  // p / gcd(p, p')

Rat poly_eval(const PolyQ& p, const Rat& x);
// Interval Horner: encloses {p(x) : x in [lo, hi]}.
std::pair<Rat, Rat> poly_eval_interval(const PolyQ& p, const Rat& lo, const Rat& hi);

// Half-extended Euclid: returns (g, u) with a*u == g (mod m), g = monic gcd(a, m).
std::pair<PolyQ, PolyQ> poly_half_ext_gcd(const PolyQ& a, const PolyQ& m);

std::string poly_to_string(const PolyZ& p);  // "[c0,c1,...,cn]"
PolyZ poly_z_from_string(const std::string& s);

}  // namespace univoque
