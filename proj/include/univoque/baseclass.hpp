#pragma once

#include <optional>
#include <vector>

#include "univoque/epseq.hpp"
#include "univoque/field.hpp"

namespace univoque {

// Position of a base q > 1 relative to the univoque set U and its closure, read off
// alpha = alpha(q):
//   Univoque    - alpha is itself a univoque sequence; integer bases land here;
//   ClosureOnly - every conjugate tail of alpha stays strictly below alpha, but the
//                 univoque test fails (q is a limit of univoque bases, not one itself);
//   VOnly       - conjugate tails stay <= alpha with equality somewhere, which forces
//                 alpha = (u conj(u))^inf for the prefix u of length minimal_k;
//   OutsideV    - some conjugate tail exceeds alpha.
enum class BaseVariant { Univoque, ClosureOnly, VOnly, OutsideV };

const char* to_string(BaseVariant v);

struct BaseClass {
    BaseVariant variant;
    bool is_integer;  // alpha constant; then q = alpha_1 + 1
    EpSeq alpha;
    // VOnly only: least k >= 1 with shift(conj(alpha), k) == alpha. The period of alpha
    // is then 2k and alpha_k > 0.
    std::optional<int> minimal_k;
};

enum class CountTag { One, Two, CountablyInfinite, UndeterminedOutsideV };

const char* to_string(CountTag t);

// How many expansions the value x behind a quasi-greedy sequence has. Counts are only
// decided for x in V_q; outside, the tag is UndeterminedOutsideV.
struct PointClass {
    bool in_Uq;          // the expansion of x is unique
    bool in_Vq;          // conjugate tails after positive digits stay <= alpha
    bool greedy_finite;  // x has a finite greedy expansion
    CountTag count;
};

// Result of running the digit generator for 1 in base q and attempting period
// detection. `certified` is set only when the detected eventually periodic candidate
// reproduces q exactly under the alpha -> base round trip; `prefix` always holds the
// raw digits computed.
struct AlphaOfOne {
    std::optional<EpSeq> certified;
    Word prefix;
};

AlphaOfOne alpha_of_one(const BasePtr& q, long max_digits);

// Throws NotQuasiGreedyAlpha unless alpha is admissible (infinite, first digit equal to
// the alphabet max, every tail <= alpha).
BaseClass classify_base(const EpSeq& alpha);

// a must be the quasi-greedy expansion of some x in J_q (throws NotQuasiGreedy
// otherwise). Fills every PointClass field; the count combines the point tests with the
// class of the base.
PointClass classify_point(const EpSeq& a, const EpSeq& alpha);

// Convenience wrapper for a value given numerically: generates max_digits quasi-greedy
// digits of x, attempts certified period detection (candidate must be quasi-greedy and
// reproduce x exactly), and classifies on success.
struct PointClassOfValue {
    std::optional<EpSeq> certified;  // the detected quasi-greedy expansion
    Word prefix;                     // raw digits, always present
    std::optional<PointClass> point; // set iff certified
};

PointClassOfValue classify_point_value(const FieldElem& x, const EpSeq& alpha,
                                       long max_digits);

// One-parameter family block^N head tail, N = 0, 1, 2, ... of digit sequences.
struct ExpansionFamily {
    Word block;
    Word head;
    EpSeq tail;

    EpSeq member(long N) const;
};

// All expansions of 1 in base q: alpha plus finitely many families. Univoque bases
// have no families; bases in closure(U) \ U contribute one (the period repeated N
// times, then closed off by a final +1 digit); bases in V \ closure(U) contribute a
// second one that lowers digit k and continues with the top digit forever.
struct ExpansionsOfOne {
    EpSeq alpha;
    std::vector<ExpansionFamily> families;
};

// Throws Unsupported for OutsideV bases: no finite description is available there.
ExpansionsOfOne expansions_of_one(const BaseClass& cls);

// The quasi-greedy expansion of l(x) = alpha_1/(q-1) - x, defined for x in V_q (throws
// NotInV otherwise). This is the digitwise conjugate of a, except that for integer
// bases the conjugate may terminate in 0^inf and is then rewritten in quasi-greedy
// form.
EpSeq reflect(const EpSeq& a, const EpSeq& alpha);

}  // namespace univoque
