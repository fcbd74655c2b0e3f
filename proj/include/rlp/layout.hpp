#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlp/ortho_rep.hpp"
#include "rlp/plane_graph.hpp"

namespace rlp {

struct GridDrawing {
    // integer grid coordinates per vertex, source terminal at the origin
    std::vector<std::pair<int64_t, int64_t>> coords;
};

// Rectangular refinement: dummy vertices and chords inserted until every
// internal face has exactly four convex corners. The mapping back to the
// input is kept per edge (-1 marks inserted elements).
struct RefinedRep {
    PlaneSPGraph g;
    OrthoRep rep;
    std::vector<int32_t> orig_edge;    // per edge of g
    std::vector<int32_t> orig_vertex;  // per vertex of g
    int cuts = 0;
};

RefinedRep refine(const PlaneSPGraph& g, const OrthoRep& rep);

// Frames the drawing, rectangulates the outer region the same way, then
// assigns coordinates by longest paths over the two segment constraint
// graphs. Realizes exactly the angles of the input representation.
GridDrawing compact(const PlaneSPGraph& g, const OrthoRep& rep);

// Axis-alignment, distinctness, crossing-freeness (integer sweep) and
// agreement of the geometric edge order with the stored rotations.
VerificationReport verify_drawing(const PlaneSPGraph& g, const GridDrawing& d);

// Deterministic SVG 1.1 text; grid y grows upward, screen y downward.
std::string emit_svg(const PlaneSPGraph& g, const GridDrawing& d, int scale = 24);

std::string coords_to_json(const GridDrawing& d);

}  // namespace rlp
