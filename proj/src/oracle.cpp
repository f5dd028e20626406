#include "univoque/oracle.hpp"

#include <utility>

#include "univoque/errors.hpp"
#include "univoque/expansion.hpp"

namespace univoque {

namespace {

constexpr long kMaxDepth = 20;

struct Enumerator {
    const FieldElem q;
    const FieldElem top;
    const int a1;
    const long depth;
    const long max_nodes;
    PrefixTree& out;

    void visit(const FieldElem& t, Word& prefix) {
        if (++out.node_count > max_nodes) {
            fail(errc::oracle_overflow, "prefix tree exceeds the node cap");
        }
        if (static_cast<long>(prefix.size()) == depth) {
            out.leaves.push_back(prefix);
            return;
        }
        for (int d = 0; d <= a1; ++d) {
            const FieldElem next = t * q - FieldElem::from_rational(out.base, Rat(d));
            if (next.sign() < 0) break;  // larger digits only push the remainder lower
            if ((top - next).sign() < 0) continue;
            prefix.push_back(d);
            visit(next, prefix);
            prefix.pop_back();
        }
    }
};

}  // namespace

PrefixTree enumerate_prefixes(const FieldElem& x, long depth, long max_nodes) {
    if (depth < 0 || depth > kMaxDepth) {
        fail(errc::out_of_range, "depth exceeds the enumeration bound");
    }
    PrefixTree out{x.base(), x, depth, {}, 0};
    const FieldElem top = top_of_Jq(out.base);
    if (x.sign() < 0 || (top - x).sign() < 0) {
        fail(errc::out_of_range, "x lies outside J_q and has no expansions");
    }
    Enumerator e{FieldElem::generator(out.base), top, alpha1_of(*out.base), depth, max_nodes, out};
    Word prefix;
    e.visit(x, prefix);
    return out;
}

long count_at_depth(const FieldElem& x, long depth, long max_nodes) {
    return static_cast<long>(enumerate_prefixes(x, depth, max_nodes).leaves.size());
}

}  // namespace univoque
