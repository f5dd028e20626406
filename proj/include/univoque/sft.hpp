#pragma once

#include <vector>

#include "univoque/components.hpp"
#include "univoque/epseq.hpp"

namespace univoque {

// Forbidden blocks of the subshift of finite type that carries the univoque
// sequences for every base inside one stability interval. All blocks share the
// same length k+1, where k is the half-period of the interval's right endpoint.
struct ForbiddenSet {
    int alphabet_max = 1;
    std::vector<Word> blocks;  // sorted, deduplicated
};

// The forbidden set of the stability interval containing the given base. Fails with
// errc::in_closure_u when the base lies in closure(U) (no interval, no finite set),
// and with errc::out_of_range when the set would exceed the enumeration cap.
ForbiddenSet forbidden_blocks(const EpSeq& alpha);
ForbiddenSet forbidden_blocks(const BasePtr& q, long max_digits = 64);

// Whether no forbidden block occurs in w (resp. anywhere in the infinite sequence).
// Digits outside [0, alphabet_max] fail with errc::alphabet_mismatch.
bool subshift_member(const Word& w, const ForbiddenSet& f);
bool subshift_member(const EpSeq& s, const ForbiddenSet& f);

// Topological type of the univoque set U_q inside J_q.
enum class BaseTopology {
    NotCantorInteger,  // integer base: co-countable in J_q, dense but not closed
    ClosureIsCantor,   // q in closure(U), non-integer: the closure of U_q is a Cantor set
    Cantor,            // U_q itself is a Cantor set
    IsolatedDense,     // U_q is countable and its isolated points are dense in it
};
const char* to_string(BaseTopology t);

BaseTopology base_topology(const EpSeq& alpha);
BaseTopology base_topology(const BasePtr& q, long max_digits = 64);

// Local type of one point of U_q, identified by its (unique) digit sequence c.
// Fails with errc::not_univoque when c is not univoque in base q.
enum class PointTopology { Isolated, Accumulation, Condensation };
const char* to_string(PointTopology t);

PointTopology point_topology(const EpSeq& c, const EpSeq& alpha);
PointTopology point_topology(const EpSeq& c, const BasePtr& q, long max_digits = 64);

}  // namespace univoque
