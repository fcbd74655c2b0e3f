#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "rlp/ortho_rep.hpp"
#include "rlp/plane_graph.hpp"
#include "rlp/spq_tree.hpp"

namespace rlp {

// A pertinent graph cut out of the host embedding, with one stub edge per
// external edge slot at each pole. Stub tips are degree-1 local vertices;
// angles at stub corners are free, which models "this component sits in an
// arbitrary surrounding" exactly the way alias vertices do.
struct ComponentView {
    PlaneSPGraph g;
    FaceStructure faces;
    int32_t outer_face = -1;
    int32_t n_real_edges = 0;  // local edges [0, n_real_edges) are pertinent
    std::vector<int32_t> vert_l2g;
    std::vector<int32_t> edge_l2g;   // pertinent locals only
    std::vector<int32_t> vert_g2l;   // host vertex -> local or -1
};

ComponentView component_view(const PlaneSPGraph& host, const SPQTree& tree, int32_t node);

// Enumerates every corner-angle assignment satisfying the vertex partitions
// (deg 2 splits of 360 into two, deg 3 into three, deg 4 all-90) and hitting
// the per-face turn-sum targets; kNoTarget faces are unconstrained. The
// callback returns false to stop early. Returns the number of assignments
// visited (i.e. accepted by the constraints).
inline constexpr int kNoTarget = INT32_MIN;
uint64_t enumerate_corner_reps(const PlaneSPGraph& g, const FaceStructure& faces,
                               const std::vector<int>& face_targets,
                               const std::function<bool(const OrthoRep&)>& cb);

// Rectilinear representations of the plane graph itself (internal faces +4,
// external -4). Throws CapExceeded beyond the edge cap.
uint64_t enumerate_reps(const PlaneSPGraph& g, int64_t edge_cap,
                        const std::function<bool(const OrthoRep&)>& cb);

// Spirality of the component with poles (pole_u, pole_v) whose edges satisfy
// `pertinent`, measured per the alias-vertex definition; result in doubled
// units. alt_path walks a different pole-to-pole path when one exists.
int64_t measure_spirality2(const PlaneSPGraph& g, const OrthoRep& rep, int32_t pole_u,
                           int32_t pole_v, const std::function<bool(int32_t)>& pertinent,
                           bool alt_path = false);

// Measures a tree node inside a component view of the node itself or of an
// ancestor (the view must contain the node's pertinent edges).
int64_t measure_in_view(const ComponentView& cv, const OrthoRep& rep, const SPQTree& tree,
                        int32_t node, bool alt_path = false);

// Achieved spirality sets per tree node (componentwise enumeration); entry
// for the root stays empty. Throws CapExceeded when the instance is too big.
std::vector<std::set<int64_t>> oracle_intervals(const PlaneSPGraph& host, const SPQTree& tree,
                                                int64_t edge_cap);

// Spiralities of every tree node in one pass over a full representation of
// the host graph (reference edge included); linear in the graph size.
std::vector<int64_t> measure_all_sigma2(const PlaneSPGraph& host, const SPQTree& tree,
                                        const OrthoRep& rep);

}  // namespace rlp
