#pragma once

#include <vector>

#include "univoque/epseq.hpp"
#include "univoque/field.hpp"

namespace univoque {

// Exhaustive tree of digit prefixes that extend to at least one expansion of x.
// A prefix w_1..w_j is extendable exactly when its scaled remainder
// q^j (x - sum w_i q^-i) stays inside [0, alpha_1/(q-1)]; the remainder is kept
// exactly, so the tree is free of rounding artifacts.
struct PrefixTree {
    BasePtr base;
    FieldElem x;
    long depth = 0;
    std::vector<Word> leaves;  // extendable prefixes of full length, lexicographic
    long node_count = 0;       // extendable prefixes of every length, root included
};

// Requires x in J_q and depth <= 20 (errc::out_of_range otherwise). Visiting more
// than max_nodes nodes fails with errc::oracle_overflow.
PrefixTree enumerate_prefixes(const FieldElem& x, long depth, long max_nodes = 1000000);

long count_at_depth(const FieldElem& x, long depth, long max_nodes = 1000000);

}  // namespace univoque
