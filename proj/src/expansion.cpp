#include "univoque/expansion.hpp"

#include "univoque/errors.hpp"

namespace univoque {

FieldElem top_of_Jq(const BasePtr& base) {
    int a1 = alpha1_of(*base);
    FieldElem q = FieldElem::generator(base);
    FieldElem one = FieldElem::from_rational(base, Rat(1));
    return FieldElem::from_rational(base, Rat(a1)) / (q - one);
}

namespace {

// Shared digit loop. At step n the scaled remainder t = q^n (x - sum_{i<=n} d_i q^-i);
// the digit is the largest d in {0..alpha_1} with d < q*t (quasi-greedy) or d <= q*t
// (greedy). Positivity (resp. nonnegativity) of t is preserved, which is exactly the
// partial-sum condition defining each algorithm.
DigitRun run_digits(const FieldElem& x, long N, bool strict) {
    if (N <= 0) fail(errc::out_of_range, "digit count must be positive");
    const BasePtr& base = x.base();
    if (x.sign() < 0 || (x - top_of_Jq(base)).sign() > 0)
        fail(errc::out_of_range, "x lies outside J_q");
    int a1 = alpha1_of(*base);
    FieldElem q = FieldElem::generator(base);

    DigitRun run{base, x, Word{}, x};
    run.digits.reserve(static_cast<std::size_t>(N));
    if (x.sign() == 0) {  // 0 has the single expansion 0^inf
        run.digits.assign(static_cast<std::size_t>(N), 0);
        return run;
    }
    FieldElem t = x;
    for (long n = 0; n < N; ++n) {
        t = t * q;
        int d = 0;
        for (int c = a1; c >= 1; --c) {
            int s = (t - FieldElem::from_rational(base, Rat(c))).sign();
            if (s > 0 || (!strict && s == 0)) {
                d = c;
                break;
            }
        }
        t = t - FieldElem::from_rational(base, Rat(d));
        run.digits.push_back(d);
    }
    run.residual = t * q.q_pow(-N);
    return run;
}

}  // namespace

DigitRun quasi_greedy_run(const FieldElem& x, long N) { return run_digits(x, N, true); }
DigitRun greedy_run(const FieldElem& x, long N) { return run_digits(x, N, false); }
Word quasi_greedy_digits(const FieldElem& x, long N) { return quasi_greedy_run(x, N).digits; }
Word greedy_digits(const FieldElem& x, long N) { return greedy_run(x, N).digits; }

void validate_alpha(const EpSeq& alpha) {
    if (!alpha.is_infinite() || alpha.digit(1) != alpha.alphabet_max() ||
        !all_shifts_le(alpha, alpha, /*strict=*/false, 1))
        fail(errc::alpha_invalid, "not an admissible quasi-greedy expansion of 1");
}

namespace {
void check_alphabet(const EpSeq& s, const EpSeq& alpha) {
    if (s.alphabet_max() != alpha.alphabet_max())
        fail(errc::alphabet_mismatch, "sequence and alpha use different alphabets");
}
}  // namespace

bool is_greedy(const EpSeq& b, const EpSeq& alpha) {
    validate_alpha(alpha);
    check_alphabet(b, alpha);
    int a1 = alpha.digit(1);
    return all_shifts_le(b, alpha, /*strict=*/true, 1, [a1](int d) { return d < a1; });
}

bool is_quasi_greedy(const EpSeq& a, const EpSeq& alpha) {
    validate_alpha(alpha);
    check_alphabet(a, alpha);
    if (a.is_zero()) return true;
    if (!a.is_infinite()) return false;
    int a1 = alpha.digit(1);
    return all_shifts_le(a, alpha, /*strict=*/false, 1, [a1](int d) { return d < a1; });
}

bool is_univoque(const EpSeq& c, const EpSeq& alpha) {
    validate_alpha(alpha);
    check_alphabet(c, alpha);
    int a1 = alpha.digit(1);
    auto guard = [a1](int d) { return d < a1; };
    // Digit c_n > 0 is the same as conjugate digit < alpha_1, so both halves share shape.
    return all_shifts_le(c, alpha, true, 1, guard) &&
           all_shifts_le(c.conjugated(), alpha, true, 1, guard);
}

EpSeq quasi_from_finite_greedy(const EpSeq& b, const EpSeq& alpha) {
    validate_alpha(alpha);
    check_alphabet(b, alpha);
    if (b.is_infinite() || b.is_zero())
        fail(errc::not_finite_greedy, "input must be finite with a nonzero digit");
    if (!is_greedy(b, alpha)) fail(errc::not_finite_greedy, "input fails the greedy test");
    Word head = b.preperiod();  // canonical finite form: preperiod then (0)
    while (!head.empty() && head.back() == 0) head.pop_back();
    head.back() -= 1;
    Word pre = head;
    pre.insert(pre.end(), alpha.preperiod().begin(), alpha.preperiod().end());
    return EpSeq(alpha.alphabet_max(), std::move(pre), alpha.period());
}

}  // namespace univoque
