#include "univoque/sft.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <utility>

#include "univoque/baseclass.hpp"
#include "univoque/errors.hpp"
#include "univoque/expansion.hpp"
#include "univoque/rational.hpp"

namespace univoque {

namespace {

std::function<bool(int)> below(int a1) {
    return [a1](int d) { return d < a1; };
}

// Blocks of the window whose right endpoint has the given alpha (which must be of
// V-only type). A sequence stays univoque across the whole window exactly when no
// window of length k+1 is >= alpha_1..alpha_k after a digit < alpha_1, in either
// the sequence or its conjugate; the forbidden set lists those windows explicitly.
ForbiddenSet blocks_of_right_endpoint(const EpSeq& q2_alpha) {
    const BaseClass cls = classify_base(q2_alpha);
    assert(cls.variant == BaseVariant::VOnly);
    const int a1 = q2_alpha.alphabet_max();
    const std::size_t k = static_cast<std::size_t>(*cls.minimal_k);
    const Word p = q2_alpha.prefix(k);

    // Count the tails >= p before enumerating: (a1+1)^k - rank(p) of them, a1 heads
    // each, doubled by conjugation.
    const Int base(a1 + 1);
    Int rank(0);
    Int power(1);
    for (std::size_t i = 0; i < k; ++i) {
        rank = rank * base + p[i];
        power *= base;
    }
    const Int total = Int(2) * Int(a1) * (power - rank);
    if (total > Int(1L << 20)) {
        fail(errc::out_of_range, "forbidden set would exceed the enumeration cap");
    }

    ForbiddenSet out;
    out.alphabet_max = a1;
    Word tail = p;
    for (;;) {
        for (int j = 0; j < a1; ++j) {
            Word b;
            b.reserve(k + 1);
            b.push_back(j);
            b.insert(b.end(), tail.begin(), tail.end());
            out.blocks.push_back(std::move(b));
        }
        // odometer step over the digit set [0, a1]
        std::size_t pos = k;
        while (pos > 0 && tail[pos - 1] == a1) --pos;
        if (pos == 0) break;
        tail[pos - 1] += 1;
        std::fill(tail.begin() + static_cast<long>(pos), tail.end(), 0);
    }
    const std::size_t direct = out.blocks.size();
    out.blocks.reserve(2 * direct);
    for (std::size_t i = 0; i < direct; ++i) {
        out.blocks.push_back(conjugate_word(out.blocks[i], a1));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    out.blocks.erase(std::unique(out.blocks.begin(), out.blocks.end()), out.blocks.end());
    return out;
}

// Walk the chain of right endpoints downward until it leaves the V-only shape,
// returning the component's left endpoint and the last V-only element.
std::pair<BaseSpec, EpSeq> descend(EpSeq cur) {
    EpSeq last = cur;
    for (;;) {
        const BaseClass cls = classify_base(cur);
        if (cls.variant != BaseVariant::VOnly) return {BaseSpec::from_alpha(cur), last};
        last = cur;
        const BaseSpec next = left_endpoint(cur);
        if (next.kind != BaseSpec::Kind::Alpha) return {next, last};
        cur = *next.alpha;
    }
}

BaseTopology topology_from_q1(const BaseSpec& q1) {
    switch (q1.kind) {
        case BaseSpec::Kind::One: return BaseTopology::IsolatedDense;
        case BaseSpec::Kind::Integer:
            return q1.n <= 2 ? BaseTopology::IsolatedDense : BaseTopology::Cantor;
        case BaseSpec::Kind::Alpha:
            return classify_base(*q1.alpha).variant == BaseVariant::VOnly
                       ? BaseTopology::IsolatedDense
                       : BaseTopology::Cantor;
    }
    return BaseTopology::Cantor;
}

// Point type for a univoque sequence c of a base inside the window (q1, q2].
PointTopology classify_in_window(const EpSeq& c, const StabilityInterval& s) {
    const auto [p1, r] = descend(*s.q2);

    // Condensation points are the sequences that stay univoque down to the lowest
    // window of the component, provided that window carries a continuum at all
    // (it does not when the component starts at 1 or at 2).
    const bool fat_bottom =
        !(p1.kind == BaseSpec::Kind::One || (p1.kind == BaseSpec::Kind::Integer && p1.n == 2));
    if (fat_bottom && is_univoque(c, r)) return PointTopology::Condensation;

    const BaseSpec& q1 = *s.q1;
    switch (q1.kind) {
        case BaseSpec::Kind::One:
            return PointTopology::Isolated;
        case BaseSpec::Kind::Integer:
            if (q1.n == 2) {
                // In (2, q2] every univoque sequence is eventually constant; only the
                // two constant limits accumulate.
                const bool limit = c.is_zero() || c == EpSeq::constant(2, 2);
                return limit ? PointTopology::Accumulation : PointTopology::Isolated;
            }
            return PointTopology::Accumulation;
        case BaseSpec::Kind::Alpha: {
            const EpSeq& a = *q1.alpha;
            // Sequences appearing at this window for the first time (univoque here
            // but only of V-type at the window's left endpoint) are isolated.
            if (classify_base(a).variant == BaseVariant::VOnly && is_quasi_greedy(c, a) &&
                all_shifts_le(c.conjugated(), a, /*strict=*/false, 1, below(a.alphabet_max())) &&
                !is_univoque(c, a)) {
                return PointTopology::Isolated;
            }
            return PointTopology::Accumulation;
        }
    }
    return PointTopology::Accumulation;
}

}  // namespace

ForbiddenSet forbidden_blocks(const EpSeq& alpha) {
    const StabilityInterval s = stability_interval(alpha);
    if (s.singleton) {
        fail(errc::in_closure_u, "base lies in closure(U); its univoque set is not of finite type");
    }
    return blocks_of_right_endpoint(*s.q2);
}

ForbiddenSet forbidden_blocks(const BasePtr& q, long max_digits) {
    const AlphaOfOne a = alpha_of_one(q, max_digits);
    if (a.certified) return forbidden_blocks(*a.certified);
    const StabilityInterval s = stability_interval(q, max_digits);
    return blocks_of_right_endpoint(*s.q2);
}

bool subshift_member(const Word& w, const ForbiddenSet& f) {
    for (int d : w) {
        if (d < 0 || d > f.alphabet_max) {
            fail(errc::alphabet_mismatch, "digit outside the alphabet of the forbidden set");
        }
    }
    if (f.blocks.empty()) return true;
    const std::size_t len = f.blocks.front().size();
    if (w.size() < len) return true;
    Word window(len);
    for (std::size_t start = 0; start + len <= w.size(); ++start) {
        std::copy(w.begin() + static_cast<long>(start),
                  w.begin() + static_cast<long>(start + len), window.begin());
        if (std::binary_search(f.blocks.begin(), f.blocks.end(), window)) return false;
    }
    return true;
}

bool subshift_member(const EpSeq& s, const ForbiddenSet& f) {
    if (s.alphabet_max() != f.alphabet_max) {
        fail(errc::alphabet_mismatch, "sequence alphabet differs from the forbidden set");
    }
    if (f.blocks.empty()) return true;
    const std::size_t len = f.blocks.front().size();
    // Every window of the eventually periodic sequence occurs among the windows
    // starting within the first preperiod+period positions.
    const std::size_t span = s.preperiod().size() + s.period().size();
    return subshift_member(s.prefix(span + len - 1), f);
}

const char* to_string(BaseTopology t) {
    switch (t) {
        case BaseTopology::NotCantorInteger: return "NotCantorInteger";
        case BaseTopology::ClosureIsCantor: return "ClosureIsCantor";
        case BaseTopology::Cantor: return "Cantor";
        case BaseTopology::IsolatedDense: return "IsolatedDense";
    }
    return "?";
}

const char* to_string(PointTopology t) {
    switch (t) {
        case PointTopology::Isolated: return "Isolated";
        case PointTopology::Accumulation: return "Accumulation";
        case PointTopology::Condensation: return "Condensation";
    }
    return "?";
}

BaseTopology base_topology(const EpSeq& alpha) {
    const BaseClass cls = classify_base(alpha);
    if (cls.is_integer) return BaseTopology::NotCantorInteger;
    if (cls.variant == BaseVariant::Univoque || cls.variant == BaseVariant::ClosureOnly) {
        return BaseTopology::ClosureIsCantor;
    }
    const StabilityInterval s = stability_interval(alpha);
    return topology_from_q1(*s.q1);
}

BaseTopology base_topology(const BasePtr& q, long max_digits) {
    const AlphaOfOne a = alpha_of_one(q, max_digits);
    if (a.certified) return base_topology(*a.certified);
    const StabilityInterval s = stability_interval(q, max_digits);
    return topology_from_q1(*s.q1);
}

PointTopology point_topology(const EpSeq& c, const EpSeq& alpha) {
    if (c.alphabet_max() != alpha.alphabet_max()) {
        fail(errc::alphabet_mismatch, "sequence alphabet differs from the base alphabet");
    }
    const BaseClass cls = classify_base(alpha);
    if (!is_univoque(c, alpha)) {
        fail(errc::not_univoque, "sequence is not univoque in this base: " + to_string(c));
    }
    if (cls.variant == BaseVariant::Univoque || cls.variant == BaseVariant::ClosureOnly) {
        // Bases in closure(U): the closure of the univoque set is perfect, and every
        // univoque sequence meets it in a condensation point.
        return PointTopology::Condensation;
    }
    const StabilityInterval s = stability_interval(alpha);
    return classify_in_window(c, s);
}

PointTopology point_topology(const EpSeq& c, const BasePtr& q, long max_digits) {
    const AlphaOfOne a = alpha_of_one(q, max_digits);
    if (a.certified) return point_topology(c, *a.certified);
    const StabilityInterval s = stability_interval(q, max_digits);
    // The univoque sequences are the same for every base of the window, and at its
    // right endpoint they are exactly the subshift members.
    const ForbiddenSet f = blocks_of_right_endpoint(*s.q2);
    if (c.alphabet_max() != f.alphabet_max) {
        fail(errc::alphabet_mismatch, "sequence alphabet differs from the base alphabet");
    }
    if (!subshift_member(c, f)) {
        fail(errc::not_univoque, "sequence is not univoque in this base: " + to_string(c));
    }
    return classify_in_window(c, s);
}

}  // namespace univoque
