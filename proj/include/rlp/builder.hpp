#pragma once

#include "rlp/ortho_rep.hpp"
#include "rlp/tester.hpp"

namespace rlp {

// The synthesized representation. The augmented pair keeps the dummy
// reference edge (the tree's pole degrees refer to it); the final pair is
// what gets drawn and verified. Both pairs coincide for a real reference.
struct Realization {
    PlaneSPGraph g_aug;
    OrthoRep rep_aug;
    PlaneSPGraph g_final;
    OrthoRep rep_final;
};

// Deterministic choice from the feasible window: smallest absolute value,
// ties broken positive.
int64_t pick_root_sigma2(const Interval& feasible);

// Top-down propagation: S-nodes greedily drain the slack left to right,
// three-child P-nodes take fixed +2/0/-2 offsets, two-child P-nodes scan the
// four alpha bits lexicographically for a combination that respects the
// forced pole angles and lands both children inside their intervals.
void assign_spiralities(Verdict& v);
// same, with the root-child spirality pinned (doubled units, must lie in the
// feasible window)
void assign_spiralities(Verdict& v, int64_t sigma_eta2);

// Bottom-up angle realization from the assigned spiralities.
Realization synthesize(const Verdict& v);

}  // namespace rlp
