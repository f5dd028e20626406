#include "univoque/baseclass.hpp"

#include <cassert>
#include <cstddef>
#include <utility>

#include "univoque/errors.hpp"
#include "univoque/expansion.hpp"

namespace univoque {

namespace {

std::function<bool(int)> below(int a1) {
    return [a1](int d) { return d < a1; };
}

// Eq-style admissibility of a candidate alpha: infinite, leading digit equal to the
// alphabet max, and sigma^k(alpha) <= alpha for every k >= 1.
bool admissible_alpha(const EpSeq& alpha) {
    return alpha.is_infinite() && alpha.digit(1) == alpha.alphabet_max() &&
           all_shifts_le(alpha, alpha, /*strict=*/false);
}

// x has a finite greedy expansion b_1...b_n exactly when its quasi-greedy expansion is
// b_1...b_{n-1}(b_n - 1) followed by alpha. Shifts of a recur with its period, so only
// the first |pre| + |per| positions need inspection; the decremented digit must leave
// room to add one back.
bool finite_greedy_suffix(const EpSeq& a, const EpSeq& alpha) {
    if (a.is_zero()) return true;
    const int a1 = alpha.alphabet_max();
    const std::size_t bound = a.preperiod().size() + a.period().size();
    for (std::size_t n = 1; n <= bound; ++n) {
        if (a.digit(n) < a1 && a.shifted(n) == alpha) return true;
    }
    return false;
}

}  // namespace

const char* to_string(BaseVariant v) {
    switch (v) {
        case BaseVariant::Univoque: return "Univoque";
        case BaseVariant::ClosureOnly: return "ClosureOnly";
        case BaseVariant::VOnly: return "VOnly";
        case BaseVariant::OutsideV: return "OutsideV";
    }
    return "?";
}

const char* to_string(CountTag t) {
    switch (t) {
        case CountTag::One: return "One";
        case CountTag::Two: return "Two";
        case CountTag::CountablyInfinite: return "CountablyInfinite";
        case CountTag::UndeterminedOutsideV: return "UndeterminedOutsideV";
    }
    return "?";
}

BaseClass classify_base(const EpSeq& alpha) {
    if (!admissible_alpha(alpha)) {
        fail(errc::not_quasi_greedy_alpha,
             "not an admissible quasi-greedy expansion of 1: " + to_string(alpha));
    }
    const bool integer = alpha.preperiod().empty() && alpha.period().size() == 1;
    BaseClass out{BaseVariant::OutsideV, integer, alpha, std::nullopt};
    if (is_univoque(alpha, alpha)) {
        out.variant = BaseVariant::Univoque;
        return out;
    }
    const EpSeq bar = alpha.conjugated();
    if (all_shifts_le(bar, alpha, /*strict=*/true)) {
        out.variant = BaseVariant::ClosureOnly;
        return out;
    }
    if (all_shifts_le(bar, alpha, /*strict=*/false)) {
        out.variant = BaseVariant::VOnly;
        // Non-strict holds but strict fails, so some conjugate tail equals alpha; the
        // least such index also fixes the periodic shape alpha = (u conj(u))^inf.
        const std::size_t bound = bar.preperiod().size() + bar.period().size();
        for (std::size_t k = 1; k <= bound; ++k) {
            if (bar.shifted(k) == alpha) {
                out.minimal_k = static_cast<int>(k);
                break;
            }
        }
        assert(out.minimal_k.has_value());
        assert(alpha.digit(static_cast<std::size_t>(*out.minimal_k)) > 0);
        return out;
    }
    return out;
}

PointClass classify_point(const EpSeq& a, const EpSeq& alpha) {
    const BaseClass base = classify_base(alpha);
    if (!is_quasi_greedy(a, alpha)) {
        fail(errc::not_quasi_greedy,
             "not a quasi-greedy sequence for this base: " + to_string(a));
    }
    PointClass pc{};
    pc.in_Uq = is_univoque(a, alpha);
    pc.in_Vq =
        all_shifts_le(a.conjugated(), alpha, /*strict=*/false, 1, below(alpha.alphabet_max()));
    pc.greedy_finite = finite_greedy_suffix(a, alpha);
    if (pc.in_Uq) {
        pc.count = CountTag::One;
    } else if (pc.in_Vq) {
        switch (base.variant) {
            case BaseVariant::Univoque:
                pc.count = CountTag::Two;
                break;
            case BaseVariant::ClosureOnly:
            case BaseVariant::VOnly:
                pc.count = CountTag::CountablyInfinite;
                break;
            case BaseVariant::OutsideV:
                // Cannot happen: outside V the tests for U_q and V_q agree.
                pc.count = CountTag::UndeterminedOutsideV;
                break;
        }
    } else {
        pc.count = CountTag::UndeterminedOutsideV;
    }
    return pc;
}

AlphaOfOne alpha_of_one(const BasePtr& q, long max_digits) {
    if (max_digits < 1) fail(errc::out_of_range, "max_digits must be positive");
    const FieldElem one = FieldElem::from_rational(q, 1);
    AlphaOfOne out{std::nullopt, quasi_greedy_digits(one, max_digits)};
    const Word& d = out.prefix;
    const int a1 = d.front();
    const std::size_t n = d.size();
    for (std::size_t total = 1; 2 * total <= n; ++total) {
        for (std::size_t p = 0; p < total; ++p) {
            const std::size_t len = total - p;
            bool consistent = true;
            for (std::size_t i = p; i + len < n && consistent; ++i) {
                consistent = d[i] == d[i + len];
            }
            if (!consistent) continue;
            EpSeq cand(a1, Word(d.begin(), d.begin() + static_cast<long>(p)),
                       Word(d.begin() + static_cast<long>(p),
                            d.begin() + static_cast<long>(total)));
            if (!admissible_alpha(cand)) continue;
            if (compare(base_from_alpha(cand), *q) == std::strong_ordering::equal) {
                out.certified = std::move(cand);
                return out;
            }
        }
    }
    return out;
}

PointClassOfValue classify_point_value(const FieldElem& x, const EpSeq& alpha,
                                       long max_digits) {
    if (max_digits < 1) fail(errc::out_of_range, "max_digits must be positive");
    PointClassOfValue out{std::nullopt, quasi_greedy_digits(x, max_digits), std::nullopt};
    const Word& d = out.prefix;
    const int a1 = alpha.alphabet_max();
    const std::size_t n = d.size();
    for (std::size_t total = 1; 2 * total <= n; ++total) {
        for (std::size_t p = 0; p < total; ++p) {
            const std::size_t len = total - p;
            bool consistent = true;
            for (std::size_t i = p; i + len < n && consistent; ++i) {
                consistent = d[i] == d[i + len];
            }
            if (!consistent) continue;
            EpSeq cand(a1, Word(d.begin(), d.begin() + static_cast<long>(p)),
                       Word(d.begin() + static_cast<long>(p),
                            d.begin() + static_cast<long>(total)));
            if (!is_quasi_greedy(cand, alpha)) continue;
            if (!(value_of(cand, x.base()) == x)) continue;
            out.certified = cand;
            out.point = classify_point(cand, alpha);
            return out;
        }
    }
    return out;
}

EpSeq ExpansionFamily::member(long N) const {
    if (N < 0) fail(errc::out_of_range, "family parameter must be >= 0");
    Word pre;
    pre.reserve(block.size() * static_cast<std::size_t>(N) + head.size() +
                tail.preperiod().size());
    for (long i = 0; i < N; ++i) pre.insert(pre.end(), block.begin(), block.end());
    pre.insert(pre.end(), head.begin(), head.end());
    pre.insert(pre.end(), tail.preperiod().begin(), tail.preperiod().end());
    return EpSeq(tail.alphabet_max(), std::move(pre), tail.period());
}

ExpansionsOfOne expansions_of_one(const BaseClass& cls) {
    const int a1 = cls.alpha.alphabet_max();
    switch (cls.variant) {
        case BaseVariant::Univoque:
            return {cls.alpha, {}};
        case BaseVariant::ClosureOnly: {
            // In closure(U) the greedy expansion of 1 is finite, which makes alpha
            // purely periodic; the remaining expansions repeat the period N times and
            // close it off with a final +1.
            assert(cls.alpha.preperiod().empty());
            Word block = cls.alpha.period();
            Word close = block;
            close.back() += 1;
            return {cls.alpha, {ExpansionFamily{block, close, EpSeq::zero(a1)}}};
        }
        case BaseVariant::VOnly: {
            assert(cls.minimal_k.has_value());
            const std::size_t k = static_cast<std::size_t>(*cls.minimal_k);
            Word block = cls.alpha.prefix(2 * k);
            Word close = block;
            close.back() += 1;
            Word drop = cls.alpha.prefix(k);
            drop.back() -= 1;
            return {cls.alpha,
                    {ExpansionFamily{block, close, EpSeq::zero(a1)},
                     ExpansionFamily{block, drop, EpSeq::constant(a1, a1)}}};
        }
        case BaseVariant::OutsideV:
        default:
            fail(errc::unsupported, "no finite description of the expansions of 1 outside V");
    }
}

EpSeq reflect(const EpSeq& a, const EpSeq& alpha) {
    const int a1 = alpha.alphabet_max();
    if (!is_quasi_greedy(a, alpha)) {
        fail(errc::not_quasi_greedy,
             "not a quasi-greedy sequence for this base: " + to_string(a));
    }
    if (!all_shifts_le(a.conjugated(), alpha, /*strict=*/false, 1, below(a1))) {
        fail(errc::not_in_v, "value is not in V_q; reflection is undefined there");
    }
    EpSeq c = a.conjugated();
    if (c.is_zero() || c.is_infinite()) return c;
    // Integer bases only: the conjugate terminated in 0^inf, i.e. it is the finite
    // greedy expansion of the reflected value. Rewrite it in quasi-greedy form.
    return quasi_from_finite_greedy(c, alpha);
}

}  // namespace univoque
