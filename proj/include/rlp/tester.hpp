#pragma once

#include <optional>
#include <string>

#include "rlp/plane_graph.hpp"
#include "rlp/rules.hpp"
#include "rlp/spq_tree.hpp"
#include "rlp/spterm.hpp"

namespace rlp {

enum class RejectReason : uint8_t {
    None,
    P3Row,        // Lemma 6 intersection empty
    Pio2Row,      // Table 1, P-io-2 condition
    Pio3Row,      // Table 1, P-io-3d condition
    Pin3Row,      // Table 1, P-in-3dd' condition
    RootCondition // I_eta does not meet Delta_rho
};

const char* to_string(RejectReason r);

struct Reject {
    int32_t node = -1;
    RejectReason reason = RejectReason::None;
};

// Everything the construction step consumes: the graph with its reference
// edge, the annotated tree, and the feasible root-spirality window.
struct Verdict {
    bool accepted = false;
    Interval feasible;         // sigma_eta candidates when accepted
    Reject reject;
    SPTerm term;               // canonical, mirror-normalized
    bool mirror_used = false;
    PlaneSPGraph graph;        // dummy included when ref_is_dummy
    SPQTree tree;
};

// Post-order interval computation; stops at the first empty row. Intervals
// are stored into the tree nodes as they are computed.
std::optional<Reject> compute_intervals(SPQTree& tree);

RootAliasConfig root_alias_config(const SPQTree& tree);

// Lemma 10: with a real reference edge the root child must meet Delta_rho;
// a dummy reference edge waives the check.
Interval test_root(const Interval& i_eta, const Interval& delta, bool ref_is_dummy);

// Full pipeline: canonicalize, orient, embed, root, classify, test.
Verdict run_test(const SPTerm& input);

}  // namespace rlp
