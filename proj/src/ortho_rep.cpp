#include "rlp/ortho_rep.hpp"

#include <json.hpp>

namespace rlp {

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::VertexSum: return "VertexSum";
        case ViolationKind::FaceSum: return "FaceSum";
        case ViolationKind::AngleRange: return "AngleRange";
        case ViolationKind::Crossing: return "Crossing";
        case ViolationKind::EmbeddingMismatch: return "EmbeddingMismatch";
    }
    return "?";
}

std::string VerificationReport::str() const {
    if (passed()) return "ok";
    std::string out;
    for (const auto& v : violations) {
        out += to_string(v.kind);
        out += " at ";
        out += v.location;
        if (!v.detail.empty()) {
            out += ": ";
            out += v.detail;
        }
        out += '\n';
    }
    return out;
}

FaceStructure trace_faces(const PlaneSPGraph& g) {
    FaceStructure f;
    f.corner_face.resize(g.n);
    for (int32_t v = 0; v < g.n; ++v) f.corner_face[v].assign(g.rotation[v].size(), -1);

    // Half-edge 2e+0 runs edges[e].first -> second. The walk leaves the head
    // along the clockwise-next edge, consuming the corner between that edge
    // and the arrival edge.
    auto head = [&](int64_t h) {
        return (h & 1) ? g.edges[h >> 1].first : g.edges[h >> 1].second;
    };
    std::vector<char> seen(2 * g.edges.size(), 0);
    for (int64_t h0 = 0; h0 < static_cast<int64_t>(2 * g.edges.size()); ++h0) {
        if (seen[h0]) continue;
        int32_t face = f.n_faces++;
        f.corners.emplace_back();
        int64_t h = h0;
        do {
            seen[h] = 1;
            int32_t y = head(h);
            int deg = g.degree(y);
            int i = g.slot_of(static_cast<int32_t>(h >> 1), y);
            int j = (i + deg - 1) % deg;
            f.corners[face].emplace_back(y, j);
            require(f.corner_face[y][j] < 0, "corner traced twice");
            f.corner_face[y][j] = face;
            int32_t e2 = g.rotation[y][j];
            h = 2 * static_cast<int64_t>(e2) + (g.edges[e2].first == y ? 0 : 1);
        } while (h != h0);
    }
    int ds = g.degree(g.s);
    require(ds > 0, "isolated source terminal");
    f.external = f.corner_face[g.s][ds - 1];
    return f;
}

VerificationReport verify_orthorep(const PlaneSPGraph& g, const OrthoRep& rep) {
    VerificationReport r;
    if (rep.angle.size() != static_cast<std::size_t>(g.n)) {
        r.violations.push_back({ViolationKind::EmbeddingMismatch, "representation",
                                "vertex count differs from the graph"});
        return r;
    }
    for (int32_t v = 0; v < g.n; ++v) {
        if (rep.angle[v].size() != g.rotation[v].size()) {
            r.violations.push_back({ViolationKind::EmbeddingMismatch, "vertex " + std::to_string(v),
                                    "corner count differs from the rotation"});
            return r;
        }
    }
    for (int32_t v = 0; v < g.n; ++v) {
        int sum = 0;
        for (std::size_t i = 0; i < rep.angle[v].size(); ++i) {
            int a = rep.angle[v][i];
            if (a != 90 && a != 180 && a != 270 && a != 360)
                r.violations.push_back({ViolationKind::AngleRange,
                                        "vertex " + std::to_string(v) + " corner " + std::to_string(i),
                                        "angle " + std::to_string(a)});
            sum += a;
        }
        if (sum != 360)
            r.violations.push_back({ViolationKind::VertexSum, "vertex " + std::to_string(v),
                                    "angles sum to " + std::to_string(sum)});
    }
    FaceStructure f = trace_faces(g);
    for (int32_t fid = 0; fid < f.n_faces; ++fid) {
        int t = 0;
        for (auto [v, slot] : f.corners[fid]) t += 2 - rep.angle[v][slot] / 90;
        int want = fid == f.external ? -4 : 4;
        if (t != want)
            r.violations.push_back({ViolationKind::FaceSum, "face " + std::to_string(fid),
                                    "turn sum " + std::to_string(t) + ", expected " +
                                        std::to_string(want)});
    }
    return r;
}

std::string orthorep_to_json(const PlaneSPGraph& g, const OrthoRep& rep) {
    FaceStructure f = trace_faces(g);
    nlohmann::ordered_json j;
    j["external_face"] = f.external;
    nlohmann::ordered_json verts = nlohmann::ordered_json::object();
    for (int32_t v = 0; v < g.n; ++v) {
        nlohmann::ordered_json lst = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < rep.angle[v].size(); ++i) {
            lst.push_back({{"face", f.corner_face[v][i]}, {"angle", rep.angle[v][i]}});
        }
        verts[std::to_string(v)] = std::move(lst);
    }
    j["vertices"] = std::move(verts);
    return j.dump();
}

}  // namespace rlp
