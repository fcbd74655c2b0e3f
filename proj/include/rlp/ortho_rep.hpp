#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlp/plane_graph.hpp"

namespace rlp {

// Zero-bend orthogonal representation: one angle per corner. Corner i of
// vertex v sits counterclockwise between rotation[v][i] and
// rotation[v][(i+1) % deg]; a degree-1 vertex has a single 360 corner.
struct OrthoRep {
    std::vector<std::vector<int16_t>> angle;

    int at(int32_t v, int slot) const { return angle[v][slot]; }
};

// Faces of the embedding. Corner (v, slot) belongs to exactly one face; the
// external face is the one holding corner (s, deg(s)-1), which is where the
// reference edge sits (or sat, for dummy-rooted graphs after its removal).
struct FaceStructure {
    int32_t n_faces = 0;
    int32_t external = -1;
    // per face, corners in walk order
    std::vector<std::vector<std::pair<int32_t, int32_t>>> corners;
    // corner_face[v][slot]
    std::vector<std::vector<int32_t>> corner_face;
};

FaceStructure trace_faces(const PlaneSPGraph& g);

enum class ViolationKind : uint8_t { VertexSum, FaceSum, AngleRange, Crossing, EmbeddingMismatch };

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string location;
    std::string detail;
};

struct VerificationReport {
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
    std::string str() const;
};

// Vertex sums, face sums (+4 internal, -4 external), angle range, and the
// corner table's agreement with the rotation system.
VerificationReport verify_orthorep(const PlaneSPGraph& g, const OrthoRep& rep);

// Representation dump: per vertex the ccw corner list with face ids.
std::string orthorep_to_json(const PlaneSPGraph& g, const OrthoRep& rep);

}  // namespace rlp
