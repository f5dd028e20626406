#pragma once

#include "univoque/epseq.hpp"
#include "univoque/field.hpp"

namespace univoque {

// One digit-generation pass: digits d_1..d_N of x in base q together with the exact
// leftover. Invariant: residual = x - sum d_i q^-i >= 0, and for quasi-greedy runs with
// x > 0 the residual stays strictly positive after every step.
struct DigitRun {
    BasePtr base;
    FieldElem x;
    Word digits;
    FieldElem residual;
};

// alpha_1/(q-1), the right endpoint of the representable interval J_q.
FieldElem top_of_Jq(const BasePtr& base);

// Largest digit with partial sum < x (quasi-greedy) or <= x (greedy). x must lie in
// J_q = [0, alpha_1/(q-1)]; x = 0 yields 0^N by convention.
DigitRun quasi_greedy_run(const FieldElem& x, long N);
DigitRun greedy_run(const FieldElem& x, long N);
Word quasi_greedy_digits(const FieldElem& x, long N);
Word greedy_digits(const FieldElem& x, long N);

// Throws AlphaInvalid unless alpha is an admissible quasi-greedy expansion of 1:
// infinite, first digit = alphabet_max, and every shifted tail <= alpha.
void validate_alpha(const EpSeq& alpha);

// Lexicographic tests against alpha = alpha(q). Guards quantify over every position n:
//   greedy:       tail after any digit < alpha_1 is strictly below alpha;
//   quasi-greedy: same with <=, plus b infinite (0^inf admitted by convention);
//   univoque:     greedy test for both the sequence and its conjugate.
bool is_greedy(const EpSeq& b, const EpSeq& alpha);
bool is_quasi_greedy(const EpSeq& a, const EpSeq& alpha);
bool is_univoque(const EpSeq& c, const EpSeq& alpha);

// For a finite greedy b = b_1...b_n 0^inf (b_n its last nonzero digit), the quasi-greedy
// expansion of the same value: b_1...b_{n-1} (b_n - 1) followed by alpha.
EpSeq quasi_from_finite_greedy(const EpSeq& b, const EpSeq& alpha);

}  // namespace univoque
