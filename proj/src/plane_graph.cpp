#include "rlp/plane_graph.hpp"

#include <algorithm>
#include <json.hpp>

namespace rlp {

int PlaneSPGraph::slot_of(int32_t e, int32_t v) const {
    const auto& rot = rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == e) return static_cast<int>(i);
    internal_error("edge not incident to vertex");
}

namespace {

struct BuildItem {
    uint32_t node;
    int32_t u, v;
};

}  // namespace

PlaneSPGraph to_plane_graph(const SPTerm& t) {
    PlaneSPGraph g;
    g.n = 2;  // s = 0, t = 1

    std::vector<int32_t> first_edge(t.nodes.size(), -1);
    std::vector<std::pair<int32_t, int32_t>> poles(t.nodes.size(), {-1, -1});

    std::vector<BuildItem> stack{{t.root, 0, 1}};
    while (!stack.empty()) {
        BuildItem it = stack.back();
        stack.pop_back();
        const TermNode& n = t.at(it.node);
        poles[it.node] = {it.u, it.v};
        switch (n.kind) {
            case TermKind::QChain: {
                first_edge[it.node] = static_cast<int32_t>(g.edges.size());
                int32_t prev = it.u;
                for (int64_t i = 1; i < n.length; ++i) {
                    int32_t mid = g.n++;
                    g.edges.emplace_back(prev, mid);
                    prev = mid;
                }
                g.edges.emplace_back(prev, it.v);
                break;
            }
            case TermKind::Series: {
                std::vector<int32_t> cut(n.children.size() + 1);
                cut.front() = it.u;
                cut.back() = it.v;
                for (std::size_t i = 1; i + 1 < cut.size(); ++i) cut[i] = g.n++;
                for (std::size_t i = n.children.size(); i-- > 0;)
                    stack.push_back({n.children[i], cut[i], cut[i + 1]});
                break;
            }
            case TermKind::Parallel: {
                for (std::size_t i = n.children.size(); i-- > 0;)
                    stack.push_back({n.children[i], it.u, it.v});
                break;
            }
        }
    }

    // Pole bundles, bottom-up: at a source pole the counterclockwise order of
    // a parallel composition's branches is right-to-left, at a sink pole
    // left-to-right.
    std::vector<std::vector<int32_t>> src_bundle(t.nodes.size()), snk_bundle(t.nodes.size());
    {
        std::vector<std::pair<uint32_t, std::size_t>> st;
        st.emplace_back(t.root, 0);
        while (!st.empty()) {
            auto& [id, next] = st.back();
            const TermNode& n = t.at(id);
            if (next < n.children.size()) {
                uint32_t c = n.children[next];
                ++next;
                st.emplace_back(c, 0);
                continue;
            }
            switch (n.kind) {
                case TermKind::QChain: {
                    int32_t fe = first_edge[id];
                    src_bundle[id] = {fe};
                    snk_bundle[id] = {static_cast<int32_t>(fe + n.length - 1)};
                    break;
                }
                case TermKind::Series:
                    src_bundle[id] = src_bundle[n.children.front()];
                    snk_bundle[id] = snk_bundle[n.children.back()];
                    break;
                case TermKind::Parallel:
                    for (auto itc = n.children.rbegin(); itc != n.children.rend(); ++itc)
                        for (int32_t e : src_bundle[*itc]) src_bundle[id].push_back(e);
                    for (uint32_t c : n.children)
                        for (int32_t e : snk_bundle[c]) snk_bundle[id].push_back(e);
                    break;
            }
            st.pop_back();
        }
    }

    g.rotation.assign(g.n, {});
    g.rotation[g.s] = src_bundle[t.root];
    g.rotation[g.t] = snk_bundle[t.root];
    // series joins and chain-internal vertices
    for (uint32_t id = 0; id < t.nodes.size(); ++id) {
        const TermNode& n = t.at(id);
        if (poles[id].first < 0) continue;  // unreachable node in the arena
        if (n.kind == TermKind::QChain) {
            int32_t fe = first_edge[id];
            for (int64_t i = 1; i < n.length; ++i) {
                int32_t mid = g.edges[fe + i - 1].second;
                g.rotation[mid] = {static_cast<int32_t>(fe + i - 1), static_cast<int32_t>(fe + i)};
            }
        } else if (n.kind == TermKind::Series) {
            for (std::size_t i = 0; i + 1 < n.children.size(); ++i) {
                int32_t m = poles[n.children[i]].second;
                auto& rot = g.rotation[m];
                rot = src_bundle[n.children[i + 1]];
                for (int32_t e : snk_bundle[n.children[i]]) rot.push_back(e);
            }
        }
    }
    return g;
}

OrientedTerm orient_for_reference(const SPTerm& canonical) {
    OrientedTerm out{canonical, false};
    const TermNode& root = canonical.at(canonical.root);
    if (root.kind != TermKind::Parallel) return out;
    auto is_q1 = [&](uint32_t c) {
        return canonical.at(c).kind == TermKind::QChain && canonical.at(c).length == 1;
    };
    if (is_q1(root.children.back())) return out;
    if (is_q1(root.children.front())) {
        out.term = mirrored(canonical);
        out.mirror_used = true;
    }
    return out;
}

void choose_reference_edge(const SPTerm& oriented, PlaneSPGraph& g) {
    const TermNode& root = oriented.at(oriented.root);
    if (root.kind == TermKind::Parallel) {
        const TermNode& last = oriented.at(root.children.back());
        if (last.kind == TermKind::QChain && last.length == 1) {
            // rightmost root branch is a single (s,t) edge; children are laid
            // out in DFS order so it owns the final edge id
            g.ref_edge = static_cast<int32_t>(g.edges.size() - 1);
            g.ref_is_dummy = false;
            return;
        }
    }
    if (g.degree(g.s) >= 4 || g.degree(g.t) >= 4)
        throw InfeasibleRooting("a dummy reference edge would exceed degree four at a terminal");
    int32_t e = static_cast<int32_t>(g.edges.size());
    g.edges.emplace_back(g.s, g.t);
    // rightmost branch: first counterclockwise at the source, last at the sink
    g.rotation[g.s].insert(g.rotation[g.s].begin(), e);
    g.rotation[g.t].push_back(e);
    g.ref_edge = e;
    g.ref_is_dummy = true;
}

std::string graph_to_json(const PlaneSPGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int32_t v = 0; v < g.n; ++v) j["vertices"].push_back(v);
    j["terminals"] = {g.s, g.t};
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
    nlohmann::ordered_json rot = nlohmann::ordered_json::object();
    for (int32_t v = 0; v < g.n; ++v) rot[std::to_string(v)] = g.rotation[v];
    j["rotation"] = std::move(rot);
    return j.dump();
}

PlaneSPGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad JSON: ") + e.what());
    }
    PlaneSPGraph g;
    try {
        auto verts = j.at("vertices").get<std::vector<int64_t>>();
        g.n = static_cast<int32_t>(verts.size());
        for (int32_t i = 0; i < g.n; ++i)
            if (verts[i] != i) throw InputError("vertices must be 0..n-1 in order");
        auto term = j.at("terminals").get<std::vector<int64_t>>();
        if (term.size() != 2) throw InputError("terminals must list exactly [s,t]");
        g.s = static_cast<int32_t>(term[0]);
        g.t = static_cast<int32_t>(term[1]);
        for (const auto& e : j.at("edges")) {
            auto p = e.get<std::vector<int64_t>>();
            if (p.size() != 2) throw InputError("each edge must be [u,v]");
            g.edges.emplace_back(static_cast<int32_t>(p[0]), static_cast<int32_t>(p[1]));
        }
        g.rotation.assign(g.n, {});
        for (int32_t v = 0; v < g.n; ++v) {
            g.rotation[v] = j.at("rotation").at(std::to_string(v)).get<std::vector<int32_t>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad graph JSON: ") + e.what());
    }
    if (g.s < 0 || g.s >= g.n || g.t < 0 || g.t >= g.n || g.s == g.t)
        throw InputError("bad terminals");
    std::vector<int> seen(g.edges.size(), 0);
    for (int32_t v = 0; v < g.n; ++v) {
        for (int32_t e : g.rotation[v]) {
            if (e < 0 || e >= static_cast<int32_t>(g.edges.size()))
                throw InputError("rotation references unknown edge");
            if (g.edges[e].first != v && g.edges[e].second != v)
                throw InputError("rotation lists a non-incident edge");
            ++seen[e];
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].first == g.edges[e].second) throw InputError("self-loops not allowed");
        if (seen[e] != 2) throw InputError("every edge must appear once in both endpoint rotations");
    }
    return g;
}

namespace {

// Reversal swaps the roles of source and sink while keeping the plane
// orientation, which reverses the child order of both compositions.
SPTerm reversed(const SPTerm& t) {
    SPTerm out;
    std::vector<uint32_t> remap(t.nodes.size(), 0);
    std::vector<std::pair<uint32_t, std::size_t>> st;
    st.emplace_back(t.root, 0);
    while (!st.empty()) {
        auto& [id, next] = st.back();
        const TermNode& n = t.at(id);
        if (next < n.children.size()) {
            uint32_t c = n.children[next];
            ++next;
            st.emplace_back(c, 0);
            continue;
        }
        TermNode m;
        m.kind = n.kind;
        m.length = n.length;
        for (auto itc = n.children.rbegin(); itc != n.children.rend(); ++itc)
            m.children.push_back(remap[*itc]);
        remap[id] = out.add(std::move(m));
        st.pop_back();
    }
    out.root = remap[t.root];
    return out;
}

}  // namespace

SPTerm graph_to_term(const PlaneSPGraph& g) {
    if (g.edges.empty()) throw NotSeriesParallel("graph has no edges");
    struct Super {
        int32_t a, b;      // current endpoints; the term is oriented a->b
        uint32_t term;
        bool alive = true;
    };
    SPTerm arena;
    std::vector<Super> ed;
    ed.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) {
        TermNode q;
        q.kind = TermKind::QChain;
        q.length = 1;
        ed.push_back({u, v, arena.add(std::move(q)), true});
    }
    std::vector<std::vector<int32_t>> rot = g.rotation;

    auto replace_slot = [&](int32_t v, int32_t olde, int32_t newe) {
        for (auto& x : rot[v])
            if (x == olde) {
                x = newe;
                return;
            }
        internal_error("slot replace failed");
    };
    auto erase_slot = [&](int32_t v, int32_t e) {
        auto& r = rot[v];
        r.erase(std::find(r.begin(), r.end(), e));
    };
    auto oriented_term = [&](int32_t e, int32_t from) {
        if (ed[e].a == from) return ed[e].term;
        SPTerm sub;
        sub.nodes = arena.nodes;
        sub.root = ed[e].term;
        SPTerm rev = reversed(sub);
        uint32_t base = static_cast<uint32_t>(arena.nodes.size());
        for (auto& n : rev.nodes) {
            for (auto& c : n.children) c += base;
            arena.nodes.push_back(std::move(n));
        }
        return rev.root + base;
    };

    int64_t alive_count = static_cast<int64_t>(ed.size());
    bool progressed = true;
    while (alive_count > 1 && progressed) {
        progressed = false;
        // parallel merges first: two alive edges with the same endpoints,
        // rotation-adjacent at both
        for (int32_t e1 = 0; e1 < static_cast<int32_t>(ed.size()) && !progressed; ++e1) {
            if (!ed[e1].alive) continue;
            int32_t x = ed[e1].a, y = ed[e1].b;
            auto& rx = rot[x];
            int d = static_cast<int>(rx.size());
            int i = 0;
            while (rx[i] != e1) ++i;
            int32_t e2 = rx[(i + 1) % d];
            if (e2 == e1) continue;
            if (!((ed[e2].a == x && ed[e2].b == y) || (ed[e2].a == y && ed[e2].b == x))) continue;
            // must also be adjacent at y with e1 following e2 counterclockwise
            auto& ry = rot[y];
            int dy = static_cast<int>(ry.size());
            int k = 0;
            while (ry[k] != e2) ++k;
            if (ry[(k + 1) % dy] != e1) continue;
            // e2 sits immediately left of e1 when x plays the source role
            TermNode p;
            p.kind = TermKind::Parallel;
            p.children = {oriented_term(e2, x), oriented_term(e1, x)};
            uint32_t pid = arena.add(std::move(p));
            ed[e1].term = pid;
            ed[e1].a = x;
            ed[e1].b = y;
            ed[e2].alive = false;
            erase_slot(x, e2);
            erase_slot(y, e2);
            --alive_count;
            progressed = true;
        }
        if (progressed) continue;
        // degree-2 smoothing away from the terminals
        for (int32_t v = 0; v < g.n && !progressed; ++v) {
            if (v == g.s || v == g.t || rot[v].size() != 2) continue;
            int32_t e1 = rot[v][0], e2 = rot[v][1];
            int32_t w1 = ed[e1].a == v ? ed[e1].b : ed[e1].a;
            int32_t w2 = ed[e2].a == v ? ed[e2].b : ed[e2].a;
            if (w1 == w2) continue;  // digon: parallel rule handles it
            TermNode sN;
            sN.kind = TermKind::Series;
            sN.children = {oriented_term(e1, w1), oriented_term(e2, v)};
            uint32_t sid = arena.add(std::move(sN));
            ed[e1].term = sid;
            ed[e1].a = w1;
            ed[e1].b = w2;
            ed[e2].alive = false;
            replace_slot(w2, e2, e1);
            erase_slot(v, e1);
            erase_slot(v, e2);
            --alive_count;
            progressed = true;
        }
    }
    if (alive_count != 1)
        throw NotSeriesParallel("series/parallel reduction got stuck");
    int32_t last = -1;
    for (int32_t e = 0; e < static_cast<int32_t>(ed.size()); ++e)
        if (ed[e].alive) last = e;
    if (!((ed[last].a == g.s && ed[last].b == g.t) || (ed[last].a == g.t && ed[last].b == g.s)))
        throw NotSeriesParallel("reduction did not end on the terminal pair");
    arena.root = oriented_term(last, g.s);
    return canonicalize(arena);
}

}  // namespace rlp
