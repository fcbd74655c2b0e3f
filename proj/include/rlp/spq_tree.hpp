#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlp/interval.hpp"
#include "rlp/plane_graph.hpp"
#include "rlp/spterm.hpp"

namespace rlp {

enum class NodeKind : uint8_t { Qstar, S, P, Proot };

// P-nodes with two children, named by pole indegrees. For the in3 family the
// two letters give the child (l/r) holding two edges at the source pole and
// at the sink pole respectively.
enum class PSubtype : uint8_t {
    None,
    Pio2_11,
    Pio2_12,
    Pio2_22,
    Pio3l_11,
    Pio3r_11,
    Pio3l_12,
    Pio3r_12,
    Pin3_ll,
    Pin3_lr,
    Pin3_rl,
    Pin3_rr,
};

const char* to_string(NodeKind k);
const char* to_string(PSubtype s);

struct SpqNode {
    NodeKind kind = NodeKind::Qstar;
    bool dummy_q = false;             // Qstar backing the dummy reference edge
    int64_t length = 0;               // Qstar: number of edges
    std::vector<int32_t> children;    // embedding order, left to right
    int32_t parent = -1;

    int32_t pole_u = -1, pole_v = -1;  // source / sink pole vertex
    int32_t indeg_u = 0, indeg_v = 0;  // edges of the pertinent graph at each pole
    int32_t outdeg_u = 0, outdeg_v = 0;

    // Contiguous edge id range of the pertinent graph, [lo, hi). Edges are
    // allocated in DFS order, and within a Q* chain in path order from the
    // source pole, so the range doubles as the chain walk.
    int32_t edge_lo = 0, edge_hi = 0;

    // P-node data (two children)
    PSubtype subtype = PSubtype::None;
    int8_t k_ul2 = 0, k_ur2 = 0, k_vl2 = 0, k_vr2 = 0;  // doubled k coefficients
    int8_t gamma = 0;     // alpha + beta - 2
    int8_t rho = 0;       // Pio3d: rho(d); Pin3: rho(d)+rho(d')

    Interval ival;        // representability interval (tester)

    // builder results
    int64_t sigma2 = 0;
    bool sigma_set = false;
    int8_t a_ul = 0, a_ur = 0, a_vl = 0, a_vr = 0;  // chosen alpha values
};

struct SPQTree {
    std::vector<SpqNode> nodes;
    int32_t root = -1;  // the Proot
    int32_t eta = -1;   // non-reference child of the root
    int32_t ref = -1;   // Qstar of the reference edge

    const SpqNode& at(int32_t i) const { return nodes[i]; }
    SpqNode& at(int32_t i) { return nodes[i]; }

    // pre-order node ids (root first), deterministic
    std::vector<int32_t> pre_order() const;
    // children-before-parents order
    std::vector<int32_t> post_order() const;
};

// Builds the normalized SPQ*-tree for an oriented term whose reference edge
// has been chosen on g. Q* chains are maximal, no S-node has an S child, no
// P-node has a P child, pole degrees are filled against g (dummy included).
SPQTree build_spq_tree(const SPTerm& oriented, const PlaneSPGraph& g);

// Fills subtype, k coefficients, gamma and rho of every P-node with two
// children; asserts the degree combination matches exactly one subtype.
void classify_p_nodes(SPQTree& tree, const PlaneSPGraph& g);

// 1 or 2 distinct alias vertices of the given pole.
int alias_count(int indeg, int outdeg);

// true when sigma of the node is an integer, false when semi-integer
bool integer_spirality(const SpqNode& n);

// Debug dump, one node per line in pre-order.
std::string tree_dump(const SPQTree& tree, const PlaneSPGraph& g);

}  // namespace rlp
