#include "rlp/oracle.hpp"

#include <algorithm>
#include <array>

namespace rlp {

namespace {

// Pertinent slots of a pole must form one cyclic arc; returns its start slot
// and length.
std::pair<int, int> pertinent_arc(const PlaneSPGraph& g, int32_t v,
                                  const std::function<bool(int32_t)>& pertinent) {
    int deg = g.degree(v);
    int k = 0;
    for (int i = 0; i < deg; ++i)
        if (pertinent(g.rotation[v][i])) ++k;
    require(k >= 1 && k < deg, "pole must touch the component and its outside");
    int start = -1;
    for (int i = 0; i < deg; ++i) {
        int prev = (i + deg - 1) % deg;
        if (pertinent(g.rotation[v][i]) && !pertinent(g.rotation[v][prev])) {
            require(start < 0, "pertinent edges not rotation-contiguous at a pole");
            start = i;
        }
    }
    require(start >= 0, "no pertinent arc found");
    for (int j = 0; j < k; ++j)
        require(pertinent(g.rotation[v][(start + j) % deg]), "pertinent arc broken");
    return {start, k};
}

// Counterclockwise corner-angle sweep at v from the slot of the incoming
// edge to the outgoing edge; 90 = right turn seen from the walk.
int sweep(const PlaneSPGraph& g, const OrthoRep& rep, int32_t v, int from_slot, int32_t to_edge) {
    int deg = g.degree(v);
    int th = 0;
    int s = from_slot;
    for (int guard = 0; guard <= deg; ++guard) {
        if (g.rotation[v][s] == to_edge) return th;
        th += rep.angle[v][s];
        s = (s + 1) % deg;
    }
    internal_error("sweep did not reach the outgoing edge");
}

int turn(const PlaneSPGraph& g, const OrthoRep& rep, int32_t v, int32_t in_edge, int32_t out_edge) {
    int th = sweep(g, rep, v, g.slot_of(in_edge, v), out_edge);
    require(th >= 90 && th <= 270, "degenerate turn angle");
    return 2 - th / 90;
}

std::vector<int32_t> find_path(const PlaneSPGraph& g, int32_t from, int32_t to,
                               const std::function<bool(int32_t)>& pertinent, bool alt) {
    // iterative DFS over pertinent edges; returns the edge sequence
    std::vector<int32_t> parent_edge(g.n, -1);
    std::vector<char> seen(g.n, 0);
    std::vector<int32_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        int32_t x = stack.back();
        stack.pop_back();
        if (x == to) break;
        const auto& rot = g.rotation[x];
        int deg = static_cast<int>(rot.size());
        for (int i = 0; i < deg; ++i) {
            int32_t e = rot[alt ? deg - 1 - i : i];
            if (!pertinent(e)) continue;
            int32_t y = g.other(e, x);
            if (seen[y]) continue;
            seen[y] = 1;
            parent_edge[y] = e;
            stack.push_back(y);
        }
    }
    require(seen[to], "poles are not connected inside the component");
    std::vector<int32_t> edges;
    int32_t x = to;
    while (x != from) {
        int32_t e = parent_edge[x];
        edges.push_back(e);
        x = g.other(e, x);
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

struct PoleStubs {
    int aliases = 1;
    // external edges carrying the alias subdivision points; -1 when the
    // alias coincides with the pole
    std::array<int32_t, 2> stub_edge{-1, -1};
};

PoleStubs pole_stubs(const PlaneSPGraph& g, int32_t v, bool is_source,
                     const std::function<bool(int32_t)>& pertinent) {
    auto [start, k] = pertinent_arc(g, v, pertinent);
    int deg = g.degree(v);
    int outdeg = deg - k;
    PoleStubs ps;
    if (k == 1) {
        ps.aliases = 1;  // alias is the pole itself
        return ps;
    }
    if (outdeg == 1) {
        ps.aliases = 1;
        ps.stub_edge[0] = g.rotation[v][(start + k) % deg];
        return ps;
    }
    require(k == 2 && outdeg == 2, "pole degrees outside the alias definition");
    ps.aliases = 2;
    if (is_source) {
        // (u,u') precedes (u,u'') counterclockwise from the component
        ps.stub_edge[0] = g.rotation[v][(start + k) % deg];
        ps.stub_edge[1] = g.rotation[v][(start + k + 1) % deg];
    } else {
        // clockwise at the sink
        ps.stub_edge[0] = g.rotation[v][(start + deg - 1) % deg];
        ps.stub_edge[1] = g.rotation[v][(start + k) % deg];
    }
    return ps;
}

}  // namespace

int64_t measure_spirality2(const PlaneSPGraph& g, const OrthoRep& rep, int32_t pole_u,
                           int32_t pole_v, const std::function<bool(int32_t)>& pertinent,
                           bool alt_path) {
    std::vector<int32_t> path = find_path(g, pole_u, pole_v, pertinent, alt_path);
    PoleStubs su = pole_stubs(g, pole_u, true, pertinent);
    PoleStubs sv = pole_stubs(g, pole_v, false, pertinent);

    // interior turns are shared by every spine
    int t_mid = 0;
    int32_t x = pole_u;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        x = g.other(path[i], x);
        t_mid += turn(g, rep, x, path[i], path[i + 1]);
    }

    auto end_turn_u = [&](int32_t stub) {
        if (stub < 0) return 0;
        return 2 - sweep(g, rep, pole_u, g.slot_of(stub, pole_u), path.front()) / 90;
    };
    auto end_turn_v = [&](int32_t stub) {
        if (stub < 0) return 0;
        return 2 - sweep(g, rep, pole_v, g.slot_of(path.back(), pole_v), stub) / 90;
    };

    // sigma2 = sum of the (at most two) spine turn counts; a single-alias
    // pole contributes its end turn to both spines
    int wu = su.aliases == 1 ? 2 * end_turn_u(su.stub_edge[0])
                             : end_turn_u(su.stub_edge[0]) + end_turn_u(su.stub_edge[1]);
    int wv = sv.aliases == 1 ? 2 * end_turn_v(sv.stub_edge[0])
                             : end_turn_v(sv.stub_edge[0]) + end_turn_v(sv.stub_edge[1]);
    return 2 * static_cast<int64_t>(t_mid) + wu + wv;
}

ComponentView component_view(const PlaneSPGraph& host, const SPQTree& tree, int32_t node) {
    const SpqNode& n = tree.at(node);
    require(n.kind != NodeKind::Proot, "no component view for the root");
    ComponentView cv;
    cv.vert_g2l.assign(host.n, -1);

    auto in_range = [&](int32_t e) { return e >= n.edge_lo && e < n.edge_hi; };

    auto local_vertex = [&](int32_t gv) {
        if (cv.vert_g2l[gv] < 0) {
            cv.vert_g2l[gv] = static_cast<int32_t>(cv.vert_l2g.size());
            cv.vert_l2g.push_back(gv);
        }
        return cv.vert_g2l[gv];
    };
    local_vertex(n.pole_u);
    local_vertex(n.pole_v);
    std::vector<int32_t> edge_g2l(host.edges.size(), -1);
    for (int32_t e = n.edge_lo; e < n.edge_hi; ++e) {
        edge_g2l[e] = static_cast<int32_t>(cv.g.edges.size());
        cv.edge_l2g.push_back(e);
        cv.g.edges.emplace_back(local_vertex(host.edges[e].first),
                                local_vertex(host.edges[e].second));
    }
    cv.n_real_edges = static_cast<int32_t>(cv.g.edges.size());

    cv.g.n = static_cast<int32_t>(cv.vert_l2g.size());
    cv.g.rotation.resize(cv.g.n);
    // poles get stub edges in every external slot; stub tips follow
    for (int32_t lv = 0; lv < cv.g.n; ++lv) {
        int32_t gv = cv.vert_l2g[lv];
        bool pole = gv == n.pole_u || gv == n.pole_v;
        for (int32_t e : host.rotation[gv]) {
            if (in_range(e)) {
                cv.g.rotation[lv].push_back(edge_g2l[e]);
            } else {
                require(pole, "internal vertex touches a non-pertinent edge");
                int32_t stub = static_cast<int32_t>(cv.g.edges.size());
                cv.g.edges.emplace_back(lv, -1);  // tip patched after the loop
                cv.g.rotation[lv].push_back(stub);
            }
        }
    }
    // materialize stub tips
    for (int32_t e = cv.n_real_edges; e < static_cast<int32_t>(cv.g.edges.size()); ++e) {
        int32_t tip = cv.g.n++;
        cv.g.edges[e].second = tip;
        cv.g.rotation.push_back({e});
    }
    cv.g.s = 0;
    cv.g.t = 1;

    cv.faces = trace_faces(cv.g);
    if (cv.n_real_edges < static_cast<int32_t>(cv.g.edges.size())) {
        int32_t tip0 = cv.g.edges[cv.n_real_edges].second;
        cv.outer_face = cv.faces.corner_face[tip0][0];
        for (int32_t e = cv.n_real_edges; e < static_cast<int32_t>(cv.g.edges.size()); ++e) {
            int32_t tip = cv.g.edges[e].second;
            require(cv.faces.corner_face[tip][0] == cv.outer_face,
                    "stub edges do not share one outer face");
        }
    } else {
        internal_error("component without external context");
    }
    return cv;
}

uint64_t enumerate_corner_reps(const PlaneSPGraph& g, const FaceStructure& faces,
                               const std::vector<int>& face_targets,
                               const std::function<bool(const OrthoRep&)>& cb) {
    static const std::vector<std::vector<std::vector<int16_t>>> kChoices = {
        {},                                         // deg 0 unused
        {{360}},                                    // deg 1
        {{90, 270}, {180, 180}, {270, 90}},         // deg 2
        {{90, 90, 180}, {90, 180, 90}, {180, 90, 90}},  // deg 3
        {{90, 90, 90, 90}},                         // deg 4
    };

    OrthoRep rep;
    rep.angle.resize(g.n);
    std::vector<int> sum_t(faces.n_faces, 0);
    std::vector<int> remaining(faces.n_faces, 0);
    for (int32_t f = 0; f < faces.n_faces; ++f)
        remaining[f] = static_cast<int>(faces.corners[f].size());

    auto feasible = [&](int32_t f) {
        int target = face_targets[f];
        if (target == kNoTarget) return true;
        return sum_t[f] - 2 * remaining[f] <= target && target <= sum_t[f] + remaining[f];
    };

    uint64_t count = 0;
    bool stop = false;

    // explicit stack over vertices; state[v] = index of the current choice
    std::vector<int> choice(g.n, -1);
    int32_t v = 0;

    auto apply = [&](int32_t vtx, const std::vector<int16_t>& angles, int dir) {
        for (std::size_t i = 0; i < angles.size(); ++i) {
            int32_t f = faces.corner_face[vtx][i];
            int t = 2 - angles[i] / 90;
            if (dir > 0) {
                rep.angle[vtx] = angles;
                sum_t[f] += t;
                remaining[f] -= 1;
            } else {
                sum_t[f] -= t;
                remaining[f] += 1;
            }
        }
    };

    while (v >= 0 && !stop) {
        int deg = g.degree(v);
        require(deg >= 1 && deg <= 4, "enumeration needs degrees 1..4");
        const auto& options = kChoices[deg];
        if (choice[v] >= 0) apply(v, options[choice[v]], -1);
        ++choice[v];
        if (choice[v] >= static_cast<int>(options.size())) {
            choice[v] = -1;
            rep.angle[v].clear();
            --v;
            continue;
        }
        apply(v, options[choice[v]], +1);
        bool ok = true;
        for (std::size_t i = 0; ok && i < options[choice[v]].size(); ++i)
            ok = feasible(faces.corner_face[v][i]);
        if (!ok) continue;
        if (v + 1 == g.n) {
            bool all = true;
            for (int32_t f = 0; all && f < faces.n_faces; ++f)
                all = face_targets[f] == kNoTarget || sum_t[f] == face_targets[f];
            if (all) {
                ++count;
                if (!cb(rep)) stop = true;
            }
            continue;
        }
        ++v;
    }
    return count;
}

uint64_t enumerate_reps(const PlaneSPGraph& g, int64_t edge_cap,
                        const std::function<bool(const OrthoRep&)>& cb) {
    if (static_cast<int64_t>(g.edges.size()) > edge_cap)
        throw CapExceeded(static_cast<int64_t>(g.edges.size()), edge_cap);
    FaceStructure faces = trace_faces(g);
    std::vector<int> targets(faces.n_faces, 4);
    targets[faces.external] = -4;
    return enumerate_corner_reps(g, faces, targets, cb);
}

int64_t measure_in_view(const ComponentView& cv, const OrthoRep& rep, const SPQTree& tree,
                        int32_t node, bool alt_path) {
    const SpqNode& n = tree.at(node);
    int32_t lu = cv.vert_g2l[n.pole_u], lv = cv.vert_g2l[n.pole_v];
    require(lu >= 0 && lv >= 0, "node poles missing from the view");
    auto pertinent = [&](int32_t le) {
        return le < cv.n_real_edges && cv.edge_l2g[le] >= n.edge_lo &&
               cv.edge_l2g[le] < n.edge_hi;
    };
    return measure_spirality2(cv.g, rep, lu, lv, pertinent, alt_path);
}

std::vector<std::set<int64_t>> oracle_intervals(const PlaneSPGraph& host, const SPQTree& tree,
                                                int64_t edge_cap) {
    if (static_cast<int64_t>(host.edges.size()) > edge_cap)
        throw CapExceeded(static_cast<int64_t>(host.edges.size()), edge_cap);
    std::vector<std::set<int64_t>> achieved(tree.nodes.size());
    for (int32_t id = 0; id < static_cast<int32_t>(tree.nodes.size()); ++id) {
        if (tree.at(id).kind == NodeKind::Proot) continue;
        ComponentView cv = component_view(host, tree, id);
        std::vector<int> targets(cv.faces.n_faces, 4);
        targets[cv.outer_face] = kNoTarget;
        enumerate_corner_reps(cv.g, cv.faces, targets, [&](const OrthoRep& rep) {
            achieved[id].insert(measure_in_view(cv, rep, tree, id));
            return true;
        });
    }
    return achieved;
}

std::vector<int64_t> measure_all_sigma2(const PlaneSPGraph& host, const SPQTree& tree,
                                        const OrthoRep& rep) {
    std::vector<int64_t> sigma2(tree.nodes.size(), 0);
    // leftmost pole-to-pole path turn counts, with first/last path edges
    std::vector<int32_t> first_e(tree.nodes.size(), -1), last_e(tree.nodes.size(), -1);
    std::vector<int64_t> t_mid(tree.nodes.size(), 0);
    for (int32_t id : tree.post_order()) {
        const SpqNode& n = tree.at(id);
        switch (n.kind) {
            case NodeKind::Qstar: {
                first_e[id] = n.edge_lo;
                last_e[id] = n.edge_hi - 1;
                int64_t t = 0;
                for (int32_t e = n.edge_lo; e + 1 < n.edge_hi; ++e) {
                    int32_t x = host.edges[e].second;
                    t += turn(host, rep, x, e, e + 1);
                }
                t_mid[id] = t;
                break;
            }
            case NodeKind::S: {
                int64_t t = 0;
                for (std::size_t i = 0; i < n.children.size(); ++i) {
                    int32_t c = n.children[i];
                    t += t_mid[c];
                    if (i + 1 < n.children.size()) {
                        int32_t m = tree.at(c).pole_v;
                        t += turn(host, rep, m, last_e[c], first_e[n.children[i + 1]]);
                    }
                }
                t_mid[id] = t;
                first_e[id] = first_e[n.children.front()];
                last_e[id] = last_e[n.children.back()];
                break;
            }
            case NodeKind::P:
            case NodeKind::Proot: {
                int32_t cl = n.children.front();
                t_mid[id] = t_mid[cl];
                first_e[id] = first_e[cl];
                last_e[id] = last_e[cl];
                break;
            }
        }
        if (n.kind == NodeKind::Proot) continue;
        auto pert = [&](int32_t e) { return e >= n.edge_lo && e < n.edge_hi; };
        PoleStubs su = pole_stubs(host, n.pole_u, true, pert);
        PoleStubs sv = pole_stubs(host, n.pole_v, false, pert);
        auto tu = [&](int32_t stub) {
            if (stub < 0) return 0;
            return 2 - sweep(host, rep, n.pole_u, host.slot_of(stub, n.pole_u), first_e[id]) / 90;
        };
        auto tv = [&](int32_t stub) {
            if (stub < 0) return 0;
            return 2 - sweep(host, rep, n.pole_v, host.slot_of(last_e[id], n.pole_v), stub) / 90;
        };
        int wu = su.aliases == 1 ? 2 * tu(su.stub_edge[0]) : tu(su.stub_edge[0]) + tu(su.stub_edge[1]);
        int wv = sv.aliases == 1 ? 2 * tv(sv.stub_edge[0]) : tv(sv.stub_edge[0]) + tv(sv.stub_edge[1]);
        sigma2[id] = 2 * t_mid[id] + wu + wv;
    }
    return sigma2;
}

}  // namespace rlp
