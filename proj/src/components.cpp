#include "univoque/components.hpp"

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <memory>
#include <utility>

#include "univoque/errors.hpp"
#include "univoque/expansion.hpp"

namespace univoque {

namespace {

// Greedy expansion of 1 as a finite word, defined for bases in V \ U: the period
// closed off with a final +1. For the VOnly shape the period is the first 2k digits.
Word beta_word(const BaseClass& cls) {
    Word b;
    if (cls.variant == BaseVariant::ClosureOnly) {
        assert(cls.alpha.preperiod().empty());
        b = cls.alpha.period();
    } else {
        assert(cls.variant == BaseVariant::VOnly && cls.minimal_k.has_value());
        b = cls.alpha.prefix(2 * static_cast<std::size_t>(*cls.minimal_k));
    }
    b.back() += 1;
    return b;
}

// The doubling step: append the conjugate of the current word, final digit bumped.
void double_word(Word& c, int a1) {
    const std::size_t len = c.size();
    for (std::size_t j = 0; j + 1 < len; ++j) c.push_back(a1 - c[j]);
    c.push_back(a1 - c[len - 1] + 1);
}

Word doubling_word(int n, long len) {
    Word c{n, 1};
    while (static_cast<long>(c.size()) < len) double_word(c, n);
    c.resize(static_cast<std::size_t>(len));
    return c;
}

}  // namespace

AlgebraicReal BaseSpec::value() const {
    switch (kind) {
        case Kind::One: return AlgebraicReal::from_rational(Rat(1));
        case Kind::Integer: return AlgebraicReal::from_rational(Rat(n));
        case Kind::Alpha: return base_from_alpha(*alpha);
    }
    fail(errc::out_of_range, "corrupt base spec");
}

std::string BaseSpec::to_text() const {
    switch (kind) {
        case Kind::One: return "1";
        case Kind::Integer: return std::to_string(n);
        case Kind::Alpha: return to_string(*alpha);
    }
    return "?";
}

Word thue_morse_prefix(long N) {
    if (N < 1) fail(errc::out_of_range, "prefix length must be positive");
    Word t{1};
    while (static_cast<long>(t.size()) < N) {
        const std::size_t len = t.size();
        for (std::size_t i = 1; i < len; ++i) t.push_back(1 - t[i - 1]);
        t.push_back(1);
    }
    t.resize(static_cast<std::size_t>(N));
    return t;
}

Word lambda_prefix(long N) {
    if (N < 1) fail(errc::out_of_range, "prefix length must be positive");
    const Word t = thue_morse_prefix(2 * N - 1);
    Word l;
    l.reserve(static_cast<std::size_t>(N));
    for (long i = 1; i <= N; ++i) {
        l.push_back(t[static_cast<std::size_t>(i - 1)] + t[static_cast<std::size_t>(2 * i - 2)]);
    }
    return l;
}

EpSeq right_endpoint(int n) {
    if (n < 1) fail(errc::out_of_range, "integer base spec must be >= 1");
    return EpSeq(n, {}, {n, 0});
}

EpSeq right_endpoint(const EpSeq& q1_alpha) {
    const BaseClass cls = classify_base(q1_alpha);
    if (cls.variant == BaseVariant::Univoque || cls.variant == BaseVariant::OutsideV) {
        fail(errc::not_left_endpoint,
             "base is not a component left endpoint: " + to_string(q1_alpha));
    }
    const int a1 = q1_alpha.alphabet_max();
    Word w = beta_word(cls);
    const Word bar = conjugate_word(w, a1);
    w.insert(w.end(), bar.begin(), bar.end());
    return EpSeq(a1, {}, std::move(w));
}

EpSeq right_endpoint(const BaseSpec& q1) {
    switch (q1.kind) {
        case BaseSpec::Kind::One: return right_endpoint(1);
        case BaseSpec::Kind::Integer: return right_endpoint(q1.n);
        case BaseSpec::Kind::Alpha: return right_endpoint(*q1.alpha);
    }
    fail(errc::out_of_range, "corrupt base spec");
}

BaseSpec left_endpoint(const EpSeq& q2_alpha) {
    const BaseClass cls = classify_base(q2_alpha);
    if (cls.variant != BaseVariant::VOnly) {
        fail(errc::not_v_only, "base is not a component right endpoint: " + to_string(q2_alpha));
    }
    Word u = q2_alpha.prefix(static_cast<std::size_t>(*cls.minimal_k));
    u.back() -= 1;
    EpSeq cand(q2_alpha.alphabet_max(), {}, std::move(u));
    if (cand.is_zero()) return BaseSpec::one();
    if (cand.preperiod().empty() && cand.period().size() == 1) {
        return BaseSpec::integer(cand.period().front() + 1);
    }
    // Non-degenerate: re-tag so the leading digit is the alphabet max again.
    return BaseSpec::from_alpha(EpSeq(cand.digit(1), cand.preperiod(), cand.period()));
}

DoublingResult doubling_construction(const BaseSpec& seed, int K) {
    if (K < 0) fail(errc::out_of_range, "doubling count must be >= 0");
    Word c;
    int a1 = 0;
    bool from_integer = true;
    switch (seed.kind) {
        case BaseSpec::Kind::One:
            c = {1, 1};
            a1 = 1;
            break;
        case BaseSpec::Kind::Integer:
            if (seed.n < 1) fail(errc::out_of_range, "integer seed must be >= 1");
            c = {seed.n, 1};
            a1 = seed.n;
            break;
        case BaseSpec::Kind::Alpha: {
            const BaseClass cls = classify_base(*seed.alpha);
            if (cls.variant == BaseVariant::Univoque || cls.variant == BaseVariant::OutsideV) {
                fail(errc::not_left_endpoint,
                     "seed is not a component left endpoint: " + to_string(*seed.alpha));
            }
            c = beta_word(cls);
            a1 = seed.alpha->alphabet_max();
            from_integer = false;
            break;
        }
    }
    if (static_cast<long>(c.size()) > (1L << 22) >> K) {
        fail(errc::out_of_range, "doubling prefix would exceed the size cap");
    }

    DoublingResult out;
    const auto push_chain = [&] {
        Word u = c;
        u.back() -= 1;
        out.chain.emplace_back(a1, Word{}, std::move(u));
#ifndef NDEBUG
        assert(classify_base(out.chain.back()).variant == BaseVariant::VOnly);
#endif
    };
    if (from_integer) push_chain();  // for word seeds this member is the seed itself
    for (int i = 0; i < K; ++i) {
        double_word(c, a1);
        push_chain();
    }
    out.prefix = std::move(c);
    return out;
}

SmallestUnivoque smallest_univoque(int n, long n_digits) {
    if (n < 1) fail(errc::out_of_range, "seed must be >= 1");
    if (n_digits < 1 || n_digits > (1L << 20)) {
        fail(errc::out_of_range, "digit count out of range");
    }
    Word prefix = doubling_word(n, n_digits);
    AlgebraicReal lower = root_of_digit_sum(prefix, n, 0);
    AlgebraicReal upper = root_of_digit_sum(prefix, n, n);
    return {std::move(prefix), std::move(lower), std::move(upper)};
}

namespace {

// Lexicographic comparison over the shared length only; "equal" means undecided when
// the words have different lengths.
std::strong_ordering overlap_cmp(const Word& a, const Word& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

// Does the digit prefix already prove that some conjugate tail exceeds the whole
// sequence? A strict first difference inside the window is conclusive no matter how
// the sequence continues.
bool prefix_refutes_V(const Word& d) {
    if (d.empty()) return false;
    const int a1 = d.front();
    const std::size_t n = d.size();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; k + i < n; ++i) {
            const int lhs = a1 - d[k + i];
            if (lhs != d[i]) {
                if (lhs > d[i]) return true;
                break;
            }
        }
    }
    return false;
}

// Bounded search for alpha of the least V-element >= q among the candidate shapes
// (u conj(u))^inf, scanning the half-period length k upward and the prefix u in
// lexicographic order. Because alpha -> q preserves order, the first acceptable
// candidate per k is that k's minimum, and the overall minimum is certified afterwards
// by endpoint inversion: left_endpoint(w) < q <= w.
class MinVSearch {
public:
    MinVSearch(BasePtr q, int a1, Word alpha_prefix)
        : q_(std::move(q)), a1_(a1), alpha_prefix_(std::move(alpha_prefix)) {}

    EpSeq run() {
        for (int k = 1; k <= kMaxHalfPeriod && !stopped_; ++k) {
            Word u{a1_};
            dfs(u, static_cast<std::size_t>(k));
        }
        if (!best_) {
            fail(errc::search_exhausted,
                 stopped_ ? "node budget exhausted before any V-element above the base was found"
                          : "no V-element found above the base with half-period <= 64");
        }
        const BaseSpec q1 = left_endpoint(*best_);
        if (compare(q1.value(), *q_) != std::strong_ordering::less) {
            fail(errc::search_exhausted,
                 "smallest candidate found could not be certified as the component endpoint");
        }
        return *best_;
    }

private:
    static constexpr int kMaxHalfPeriod = 64;
    static constexpr long kNodeBudget = 200000;

    BasePtr q_;
    int a1_;
    Word alpha_prefix_;
    long nodes_ = 0;
    bool stopped_ = false;
    std::optional<EpSeq> best_;
    Word best_digits_;

    bool spend() {
        if (++nodes_ > kNodeBudget) stopped_ = true;
        return !stopped_;
    }

    // Necessary conditions on a partial prefix u of the candidate word: no suffix of u
    // may already exceed u itself, u may not fall strictly below alpha(q), and u may
    // not rise strictly above the best candidate found so far.
    bool feasible(const Word& u) const {
        for (std::size_t i = 1; i < u.size(); ++i) {
            Word suffix(u.begin() + static_cast<long>(i), u.end());
            if (overlap_cmp(suffix, u) == std::strong_ordering::greater) return false;
        }
        if (overlap_cmp(u, alpha_prefix_) == std::strong_ordering::less) return false;
        if (best_ && overlap_cmp(u, best_digits_) == std::strong_ordering::greater) return false;
        return true;
    }

    // Returns true once this k has produced its (lexicographically first) acceptable
    // candidate, ending the scan for this k.
    bool dfs(Word& u, std::size_t k) {
        if (!spend()) return true;
        if (u.size() == k) return accept(u);
        for (int d = 0; d <= a1_; ++d) {
            u.push_back(d);
            const bool done = feasible(u) && dfs(u, k);
            u.pop_back();
            if (done || stopped_) return done;
        }
        return false;
    }

    bool accept(const Word& u) {
        Word w = u;
        const Word bar = conjugate_word(u, a1_);
        w.insert(w.end(), bar.begin(), bar.end());
        EpSeq cand(a1_, {}, std::move(w));
        if (!(cand.is_infinite() && cand.digit(1) == a1_ && all_shifts_le(cand, cand, false))) {
            return false;
        }
        if (!all_shifts_le(cand.conjugated(), cand, false)) return false;
        if (compare(base_from_alpha(cand), *q_) == std::strong_ordering::less) return false;
        if (best_ && lex_cmp(cand, *best_) != std::strong_ordering::less) return true;
        best_digits_ = cand.prefix(2 * static_cast<std::size_t>(kMaxHalfPeriod) + 2);
        best_ = std::move(cand);
        return true;
    }
};

}  // namespace

StabilityInterval stability_interval(const EpSeq& alpha) {
    const BaseClass cls = classify_base(alpha);
    if (cls.variant == BaseVariant::Univoque || cls.variant == BaseVariant::ClosureOnly) {
        return {true, alpha, std::nullopt, std::nullopt};
    }
    if (cls.variant == BaseVariant::VOnly) {
        return {false, alpha, left_endpoint(alpha), alpha};
    }
    const BasePtr q = std::make_shared<const AlgebraicReal>(base_from_alpha(alpha));
    EpSeq q2 = MinVSearch(q, alpha.alphabet_max(), alpha.prefix(128)).run();
    return {false, alpha, left_endpoint(q2), std::move(q2)};
}

StabilityInterval stability_interval(const BasePtr& q, long max_digits) {
    const AlphaOfOne a = alpha_of_one(q, max_digits);
    if (a.certified) return stability_interval(*a.certified);
    if (!prefix_refutes_V(a.prefix)) {
        fail(errc::unclassifiable,
             "alpha(q) was not certified within " + std::to_string(max_digits) +
                 " digits and its prefix does not refute membership in V");
    }
    EpSeq q2 = MinVSearch(q, a.prefix.front(), a.prefix).run();
    BaseSpec q1 = left_endpoint(q2);
    return {false, std::nullopt, std::move(q1), std::move(q2)};
}

namespace {

ClosureComponent descend_from(const EpSeq& start) {
    ClosureComponent out{BaseSpec::one(), {}, start};
    EpSeq cur = start;
    for (;;) {
        const BaseClass cls = classify_base(cur);
        if (cls.variant != BaseVariant::VOnly) {
            // Terminus in closure(U): the component left endpoint itself.
            out.p1 = BaseSpec::from_alpha(cur);
            break;
        }
        out.chain.push_back(cur);
        const BaseSpec next = left_endpoint(cur);
        if (next.kind != BaseSpec::Kind::Alpha) {
            out.p1 = next;
            break;
        }
        cur = *next.alpha;
    }
    assert(!out.chain.empty());
    out.r = out.chain.back();
    return out;
}

}  // namespace

ClosureComponent closure_component(const EpSeq& alpha) {
    const StabilityInterval s = stability_interval(alpha);
    if (s.singleton) {
        fail(errc::in_closure_u,
             "base lies in closure(U); it is not inside a complement component");
    }
    return descend_from(*s.q2);
}

ClosureComponent closure_component(const BasePtr& q, long max_digits) {
    const StabilityInterval s = stability_interval(q, max_digits);
    if (s.singleton) {
        fail(errc::in_closure_u,
             "base lies in closure(U); it is not inside a complement component");
    }
    return descend_from(*s.q2);
}

const char* to_string(Cardinality c) {
    switch (c) {
        case Cardinality::EndpointsOnly: return "EndpointsOnly";
        case Cardinality::CountablyInfinite: return "CountablyInfinite";
        case Cardinality::Continuum: return "Continuum";
    }
    return "?";
}

Cardinality cardinality_of_Uq(const BasePtr& q, long depth) {
    if (depth < 1) fail(errc::out_of_range, "depth must be positive");
    if (compare(*q, Rat(1)) != std::strong_ordering::greater) {
        fail(errc::out_of_range, "base must exceed 1");
    }
    const AlgebraicReal golden(PolyZ{-1, -1, 1}, Rat(1), Rat(2));
    if (compare(*q, golden) != std::strong_ordering::greater) {
        return Cardinality::EndpointsOnly;
    }
    // Above G the answer is decided by which side of the nearest doubling-limit base
    // (the least univoque base of the integer window) q falls on; the order-preserving
    // digit map makes that a first-difference comparison.
    const bool upper_window = compare(*q, Rat(2)) == std::strong_ordering::greater;
    const Word limit = doubling_word(upper_window ? 2 : 1, depth);
    const Word d = quasi_greedy_digits(FieldElem::from_rational(q, 1), depth);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != limit[i]) {
            return d[i] > limit[i] ? Cardinality::Continuum : Cardinality::CountablyInfinite;
        }
    }
    fail(errc::undecided_at_precision,
         "digits of 1 agree with the doubling word through depth " + std::to_string(depth));
}

Constants constants(long digits) {
    return {AlgebraicReal(PolyZ{-1, -1, 1}, Rat(1), Rat(2)), smallest_univoque(1, digits),
            smallest_univoque(2, digits)};
}

}  // namespace univoque
