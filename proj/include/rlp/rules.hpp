#pragma once

#include <vector>

#include "rlp/interval.hpp"
#include "rlp/spq_tree.hpp"

namespace rlp {

// Representability conditions and intervals, one function per table row. All
// arithmetic is exact in doubled units. Empty is the row's "condition
// violated" answer, never an error.

// Q*-node of length l: always representable, [-l+1, l-1].
Interval q_interval(int64_t length);

// S-node: endpoint-wise sum of the children.
Interval s_interval(const std::vector<Interval>& children);

// P-node with three children (all spiralities integer).
Interval p3_interval(const Interval& il, const Interval& ic, const Interval& ir);

// P-node with two children; subtype, gamma and rho as classified.
Interval p2_interval(PSubtype subtype, int gamma, int rho, const Interval& il, const Interval& ir);

enum class RootAliasConfig { BothCoincide, OneCoincides, NoneCoincide };

// Lemma-10 window for the spirality of the non-reference root child when the
// reference edge is real: [2,6], [3,5] or [4,4].
Interval root_delta(RootAliasConfig cfg);

}  // namespace rlp
