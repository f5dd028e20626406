#pragma once

#include <optional>
#include <string>
#include <vector>

#include "univoque/algebraic.hpp"
#include "univoque/baseclass.hpp"
#include "univoque/epseq.hpp"
#include "univoque/field.hpp"

namespace univoque {

// A base named structurally: the number 1 (standing in for 0^inf), an integer n >= 2,
// or a non-integer base through its alpha. Endpoints of complement components are
// always of one of these shapes.
struct BaseSpec {
    enum class Kind { One, Integer, Alpha };

    Kind kind;
    int n = 0;                   // Integer only
    std::optional<EpSeq> alpha;  // Alpha only

    static BaseSpec one() { return {Kind::One, 0, std::nullopt}; }
    static BaseSpec integer(int n) { return {Kind::Integer, n, std::nullopt}; }
    static BaseSpec from_alpha(EpSeq a) { return {Kind::Alpha, 0, std::move(a)}; }

    AlgebraicReal value() const;  // 1, n, or the root recovered from alpha
    std::string to_text() const;  // "1", "3", "(1100)"

    bool operator==(const BaseSpec& o) const {
        return kind == o.kind && n == o.n && alpha == o.alpha;
    }
};

// First N digits of the 0/1 word t with t_1 = 1 extended by t_{2L} = 1 and
// t_{L+i} = 1 - t_i for 1 <= i < L at each doubling of the length L.
Word thue_morse_prefix(long N);
// l_i = t_i + t_{2i-1} over {0,1,2}.
Word lambda_prefix(long N);

// alpha of the least V-element strictly above the given base. Defined for integers and
// for bases in V \ U (throws NotLeftEndpoint for Univoque and OutsideV inputs): these
// are exactly the left endpoints of the complement components of V.
EpSeq right_endpoint(int n);
EpSeq right_endpoint(const EpSeq& q1_alpha);
EpSeq right_endpoint(const BaseSpec& q1);

// Inverse direction: the left endpoint of the component whose right endpoint is the
// given VOnly base. (alpha_1...alpha_k^-)^inf collapses to the number 1 when zero and
// to an integer when constant. Throws NotVOnly otherwise.
BaseSpec left_endpoint(const EpSeq& q2_alpha);

// Word doubling from a seed: the seed word is the finite greedy expansion of 1 at the
// seed base (n1 for the integer n), and each step appends the conjugate of the current
// word with the last digit bumped by one. chain[i] is the certified VOnly base whose
// greedy expansion of 1 is the current word, so chain members are consecutive
// right_endpoints and their limit is the least univoque base above the seed.
struct DoublingResult {
    Word prefix;               // c_1 ... c_{2^K m}
    std::vector<EpSeq> chain;  // strictly increasing; for EpSeq seeds the seed itself
                               // is omitted
};

DoublingResult doubling_construction(const BaseSpec& seed, int K);

// Prefix of the expansion of 1 in base q^(n), the least univoque base in (n, n+1),
// with an exact two-sided enclosure: `lower` is the base where the prefix alone sums
// to 1, `upper` the base where the prefix plus a constant top-digit tail does. Both
// bounds are strict.
struct SmallestUnivoque {
    Word prefix;
    AlgebraicReal lower;
    AlgebraicReal upper;
};

SmallestUnivoque smallest_univoque(int n, long n_digits);

// Maximal stability interval around q: a singleton for bases in closure(U), otherwise
// the half-open component (q1, q2]. For bases outside V the right endpoint is found by
// bounded search and certified by the endpoint inversion q1 < q <= q2.
struct StabilityInterval {
    bool singleton;
    std::optional<EpSeq> alpha;  // certified alpha of q itself, when known
    std::optional<BaseSpec> q1;  // interval case
    std::optional<EpSeq> q2;     // interval case; always classifies VOnly
};

StabilityInterval stability_interval(const EpSeq& alpha);
// Numeric entry: certifies alpha when possible; otherwise the digit prefix must
// already refute membership in V (throws Unclassifiable when it cannot decide).
StabilityInterval stability_interval(const BasePtr& q, long max_digits = 64);

// The component (p1, p2) of the complement of closure(U) containing q, described by
// the descending chain of V-elements inside it: start at q's V-component right
// endpoint and iterate left_endpoint while it stays VOnly. p1 is the terminus (1, an
// integer, or a ClosureOnly base); r = chain.back() is the least V-element in
// (p1, p2).
struct ClosureComponent {
    BaseSpec p1;
    std::vector<EpSeq> chain;  // VOnly members, descending
    EpSeq r;
};

ClosureComponent closure_component(const EpSeq& alpha);
ClosureComponent closure_component(const BasePtr& q, long max_digits = 64);

enum class Cardinality { EndpointsOnly, CountablyInfinite, Continuum };

const char* to_string(Cardinality c);

// |U_q| by exact interval location: (1, G] -> EndpointsOnly, (G, q') and (2, q'') ->
// CountablyInfinite, [q', 2] and [q'', oo) -> Continuum. Sides of the two limit bases
// are decided by comparing the digits of 1 in base q against the doubling word; a full
// match through `depth` digits raises UndecidedAtPrecision.
Cardinality cardinality_of_Uq(const BasePtr& q, long depth = 64);

struct Constants {
    AlgebraicReal G;                  // root of x^2 - x - 1 in (1, 2)
    SmallestUnivoque q_prime;         // least univoque base in (1, 2)
    SmallestUnivoque q_double_prime;  // least univoque base in (2, 3)
};

Constants constants(long digits = 16);

}  // namespace univoque
