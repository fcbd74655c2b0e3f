#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlp/spterm.hpp"

namespace rlp {

// A plane embedded two-terminal series-parallel (multi)graph. Vertex 0 is the
// source terminal s, vertex 1 the sink t. Edges are oriented source-to-sink
// as built. rotation[v] lists incident edge ids counterclockwise; at the
// source pole of a parallel composition the branches appear right-to-left,
// at the sink pole left-to-right, so the external face is to the right of
// the reference edge traversed s->t.
struct PlaneSPGraph {
    int32_t n = 0;
    std::vector<std::pair<int32_t, int32_t>> edges;
    std::vector<std::vector<int32_t>> rotation;
    int32_t s = 0, t = 1;
    int32_t ref_edge = -1;
    bool ref_is_dummy = false;

    int degree(int32_t v) const { return static_cast<int>(rotation[v].size()); }
    int32_t other(int32_t e, int32_t v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }
    // Slot of edge e in rotation[v]; edges are loop-free so it is unique.
    int slot_of(int32_t e, int32_t v) const;
};

// Builds the graph of a canonical term (the reference edge is not chosen yet).
PlaneSPGraph to_plane_graph(const SPTerm& canonical);

// Mirrors the term if only its leftmost root branch qualifies as the
// reference edge, so that downstream code always sees the reference as the
// rightmost branch. Verdicts are reflection-invariant.
struct OrientedTerm {
    SPTerm term;       // canonical, possibly mirrored
    bool mirror_used = false;
};
OrientedTerm orient_for_reference(const SPTerm& canonical);

// Picks the reference edge on an already oriented term/graph: the rightmost
// root branch when it is a single edge joining the terminals, otherwise a
// dummy edge appended as the new rightmost branch. Throws InfeasibleRooting
// if a dummy would push a terminal past degree four.
void choose_reference_edge(const SPTerm& oriented, PlaneSPGraph& g);

// JSON graph exchange:
//   {"vertices":[ids],"terminals":[s,t],"edges":[[u,v],...],"rotation":{"v":[edge ids ccw]}}
std::string graph_to_json(const PlaneSPGraph& g);
PlaneSPGraph graph_from_json(const std::string& text);

// Recovers a term from an embedded graph by series/parallel reduction
// (degree-2 smoothing + merging of rotation-adjacent parallel edges).
// Throws NotSeriesParallel when the reduction gets stuck.
SPTerm graph_to_term(const PlaneSPGraph& g);

}  // namespace rlp
