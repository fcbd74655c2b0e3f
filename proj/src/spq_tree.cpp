#include "rlp/spq_tree.hpp"

#include <algorithm>

namespace rlp {

const char* to_string(NodeKind k) {
    switch (k) {
        case NodeKind::Qstar: return "Q*";
        case NodeKind::S: return "S";
        case NodeKind::P: return "P";
        case NodeKind::Proot: return "Pr";
    }
    return "?";
}

const char* to_string(PSubtype s) {
    switch (s) {
        case PSubtype::None: return "-";
        case PSubtype::Pio2_11: return "Pio2_11";
        case PSubtype::Pio2_12: return "Pio2_12";
        case PSubtype::Pio2_22: return "Pio2_22";
        case PSubtype::Pio3l_11: return "Pio3l_11";
        case PSubtype::Pio3r_11: return "Pio3r_11";
        case PSubtype::Pio3l_12: return "Pio3l_12";
        case PSubtype::Pio3r_12: return "Pio3r_12";
        case PSubtype::Pin3_ll: return "Pin3_ll";
        case PSubtype::Pin3_lr: return "Pin3_lr";
        case PSubtype::Pin3_rl: return "Pin3_rl";
        case PSubtype::Pin3_rr: return "Pin3_rr";
    }
    return "?";
}

std::vector<int32_t> SPQTree::pre_order() const {
    std::vector<int32_t> out;
    out.reserve(nodes.size());
    std::vector<int32_t> st{root};
    while (!st.empty()) {
        int32_t id = st.back();
        st.pop_back();
        out.push_back(id);
        const auto& ch = nodes[id].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) st.push_back(*it);
    }
    return out;
}

std::vector<int32_t> SPQTree::post_order() const {
    std::vector<int32_t> out;
    out.reserve(nodes.size());
    std::vector<std::pair<int32_t, std::size_t>> st;
    st.emplace_back(root, 0);
    while (!st.empty()) {
        auto& [id, next] = st.back();
        if (next < nodes[id].children.size()) {
            int32_t c = nodes[id].children[next];
            ++next;
            st.emplace_back(c, 0);
            continue;
        }
        out.push_back(id);
        st.pop_back();
    }
    return out;
}

namespace {

// Mirrors to_plane_graph's DFS allocation to recover vertex/edge id ranges.
struct RawBuild {
    const SPTerm& t;
    SPQTree& tree;
    std::vector<int32_t> node_of;  // term node -> tree node
};

int32_t build_raw(const SPTerm& t, SPQTree& tree) {
    struct Item {
        uint32_t term_node;
        int32_t u, v;
        int32_t tree_node;
        bool entered;
    };
    int32_t vcount = 2;
    int32_t ecount = 0;
    (void)vcount;
    std::vector<Item> st;

    auto make_node = [&](uint32_t tn, int32_t u, int32_t v) {
        SpqNode n;
        const TermNode& src = t.at(tn);
        switch (src.kind) {
            case TermKind::QChain: n.kind = NodeKind::Qstar; n.length = src.length; break;
            case TermKind::Series: n.kind = NodeKind::S; break;
            case TermKind::Parallel: n.kind = NodeKind::P; break;
        }
        n.pole_u = u;
        n.pole_v = v;
        tree.nodes.push_back(std::move(n));
        return static_cast<int32_t>(tree.nodes.size() - 1);
    };

    int32_t root = make_node(t.root, 0, 1);
    st.push_back({t.root, 0, 1, root, false});
    while (!st.empty()) {
        Item& it = st.back();
        const TermNode& n = t.at(it.term_node);
        if (!it.entered) {
            it.entered = true;
            SpqNode& me = tree.nodes[it.tree_node];
            me.edge_lo = ecount;
            if (n.kind == TermKind::QChain) {
                vcount += static_cast<int32_t>(n.length - 1);
                ecount += static_cast<int32_t>(n.length);
                me.edge_hi = ecount;
                st.pop_back();
                continue;
            }
            std::vector<int32_t> cut;
            if (n.kind == TermKind::Series) {
                cut.resize(n.children.size() + 1);
                cut.front() = it.u;
                cut.back() = it.v;
                for (std::size_t i = 1; i + 1 < cut.size(); ++i) cut[i] = vcount++;
            }
            // children are processed left to right; push in reverse
            std::vector<Item> pending;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                int32_t cu = n.kind == TermKind::Series ? cut[i] : it.u;
                int32_t cv = n.kind == TermKind::Series ? cut[i + 1] : it.v;
                int32_t cn = make_node(n.children[i], cu, cv);
                tree.nodes[cn].parent = it.tree_node;
                tree.nodes[it.tree_node].children.push_back(cn);
                pending.push_back({n.children[i], cu, cv, cn, false});
            }
            for (auto p = pending.rbegin(); p != pending.rend(); ++p) st.push_back(*p);
            continue;
        }
        tree.nodes[it.tree_node].edge_hi = ecount;
        st.pop_back();
    }
    return root;
}

void flatten_and_merge(SPQTree& tree, int32_t root) {
    // post-order rewrite in place: splice same-kind children, merge adjacent
    // Q* siblings of an S-node, collapse single-child compositions and
    // all-Q* S-nodes
    std::vector<std::pair<int32_t, std::size_t>> st;
    st.emplace_back(root, 0);
    std::vector<int32_t> replacement(tree.nodes.size(), -1);
    while (!st.empty()) {
        auto& [id, next] = st.back();
        SpqNode& n = tree.nodes[id];
        if (next < n.children.size()) {
            int32_t c = n.children[next];
            ++next;
            st.emplace_back(c, 0);
            continue;
        }
        st.pop_back();
        if (n.kind == NodeKind::Qstar) {
            replacement[id] = id;
            continue;
        }
        std::vector<int32_t> kids;
        for (int32_t c : n.children) {
            int32_t rc = replacement[c];
            if (tree.nodes[rc].kind == n.kind) {
                for (int32_t gc : tree.nodes[rc].children) kids.push_back(gc);
            } else {
                kids.push_back(rc);
            }
        }
        if (n.kind == NodeKind::S) {
            std::vector<int32_t> merged;
            for (int32_t c : kids) {
                if (!merged.empty() && tree.nodes[merged.back()].kind == NodeKind::Qstar &&
                    tree.nodes[c].kind == NodeKind::Qstar) {
                    SpqNode& a = tree.nodes[merged.back()];
                    SpqNode& b = tree.nodes[c];
                    require(a.edge_hi == b.edge_lo, "merged chains are not edge-adjacent");
                    a.length += b.length;
                    a.edge_hi = b.edge_hi;  // the shared join becomes chain-internal
                    a.pole_v = b.pole_v;
                } else {
                    merged.push_back(c);
                }
            }
            kids = std::move(merged);
        }
        if (kids.size() == 1) {
            replacement[id] = kids[0];
            continue;
        }
        n.children = std::move(kids);
        for (int32_t c : n.children) tree.nodes[c].parent = id;
        replacement[id] = id;
    }
    tree.root = replacement[root];
}

void fill_degrees(SPQTree& tree, const PlaneSPGraph& g) {
    for (int32_t id : tree.post_order()) {
        SpqNode& n = tree.at(id);
        switch (n.kind) {
            case NodeKind::Qstar:
                n.indeg_u = n.indeg_v = 1;
                break;
            case NodeKind::S:
                n.indeg_u = tree.at(n.children.front()).indeg_u;
                n.indeg_v = tree.at(n.children.back()).indeg_v;
                break;
            case NodeKind::P:
            case NodeKind::Proot: {
                int a = 0, b = 0;
                for (int32_t c : n.children) {
                    a += tree.at(c).indeg_u;
                    b += tree.at(c).indeg_v;
                }
                n.indeg_u = a;
                n.indeg_v = b;
                break;
            }
        }
        n.outdeg_u = g.degree(n.pole_u) - n.indeg_u;
        n.outdeg_v = g.degree(n.pole_v) - n.indeg_v;
        require(n.outdeg_u >= 0 && n.outdeg_v >= 0, "pole indegree exceeds vertex degree");
    }
}

}  // namespace

SPQTree build_spq_tree(const SPTerm& oriented, const PlaneSPGraph& g) {
    require(g.ref_edge >= 0, "reference edge not chosen");
    SPQTree tree;
    int32_t raw_root = build_raw(oriented, tree);
    flatten_and_merge(tree, raw_root);

    // re-root: the root is always a P-node with two children, the right one
    // being the Q* of the reference edge
    int32_t eta, ref;
    if (g.ref_is_dummy) {
        eta = tree.root;
        SpqNode rq;
        rq.kind = NodeKind::Qstar;
        rq.dummy_q = true;
        rq.length = 1;
        rq.pole_u = g.s;
        rq.pole_v = g.t;
        rq.edge_lo = g.ref_edge;
        rq.edge_hi = g.ref_edge + 1;
        tree.nodes.push_back(std::move(rq));
        ref = static_cast<int32_t>(tree.nodes.size() - 1);
    } else {
        SpqNode& old_root = tree.at(tree.root);
        require(old_root.kind == NodeKind::P, "real reference requires a parallel root");
        require(tree.at(old_root.children.back()).kind == NodeKind::Qstar &&
                    tree.at(old_root.children.back()).length == 1,
                "rightmost root branch is not a single edge");
        ref = old_root.children.back();
        require(tree.at(ref).edge_lo == g.ref_edge, "reference edge id mismatch");
        if (old_root.children.size() == 2) {
            eta = old_root.children.front();
        } else {
            old_root.children.pop_back();
            old_root.edge_hi = g.ref_edge;  // the reference edge leaves eta
            eta = tree.root;
        }
    }

    SpqNode proot;
    proot.kind = NodeKind::Proot;
    proot.pole_u = g.s;
    proot.pole_v = g.t;
    proot.children = {eta, ref};
    proot.edge_lo = 0;
    proot.edge_hi = static_cast<int32_t>(g.edges.size());
    tree.nodes.push_back(std::move(proot));
    tree.root = static_cast<int32_t>(tree.nodes.size() - 1);
    tree.at(eta).parent = tree.root;
    tree.at(ref).parent = tree.root;
    tree.eta = eta;
    tree.ref = ref;

    // drop arena nodes orphaned by normalization and renumber in pre-order
    {
        std::vector<int32_t> order = tree.pre_order();
        std::vector<int32_t> remap(tree.nodes.size(), -1);
        for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<int32_t>(i);
        std::vector<SpqNode> packed(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            packed[i] = std::move(tree.nodes[order[i]]);
            for (int32_t& c : packed[i].children) c = remap[c];
            if (packed[i].parent >= 0) packed[i].parent = remap[packed[i].parent];
        }
        tree.nodes = std::move(packed);
        tree.root = remap[tree.root];
        tree.eta = remap[tree.eta];
        tree.ref = remap[tree.ref];
    }

    fill_degrees(tree, g);

    // shape sanity: the normalization the interval rules rely on
    for (int32_t id : tree.pre_order()) {
        const SpqNode& n = tree.at(id);
        if (n.kind == NodeKind::S) {
            require(n.children.size() >= 2, "S-node with fewer than two children");
            for (int32_t c : n.children)
                require(tree.at(c).kind != NodeKind::S, "S-node child of an S-node");
        }
        if (n.kind == NodeKind::P) {
            require(n.children.size() == 2 || n.children.size() == 3,
                    "P-node must have two or three children");
            for (int32_t c : n.children)
                require(tree.at(c).kind != NodeKind::P, "P-node child of a P-node");
        }
    }
    return tree;
}

int alias_count(int indeg, int outdeg) {
    if (indeg == 1) return 1;
    if (indeg == 2 && outdeg == 2) return 2;
    if (indeg > 1 && outdeg == 1) return 1;
    internal_error("pole degree combination outside the spirality definition");
}

bool integer_spirality(const SpqNode& n) {
    return ((alias_count(n.indeg_u, n.outdeg_u) + alias_count(n.indeg_v, n.outdeg_v)) & 1) == 0;
}

void classify_p_nodes(SPQTree& tree, const PlaneSPGraph& g) {
    (void)g;
    for (int32_t id : tree.post_order()) {
        SpqNode& n = tree.at(id);
        if (n.kind != NodeKind::P) continue;
        if (n.children.size() == 3) {
            for (int32_t c : n.children)
                require(tree.at(c).indeg_u == 1 && tree.at(c).indeg_v == 1,
                        "P-node with three children requires single-edge attachment");
            require(n.outdeg_u == 1 && n.outdeg_v == 1, "three-child P-node pole outdegree");
            continue;
        }
        const SpqNode& l = tree.at(n.children[0]);
        const SpqNode& r = tree.at(n.children[1]);
        int lU = l.indeg_u, rU = r.indeg_u, lV = l.indeg_v, rV = r.indeg_v;
        int iU = n.indeg_u, iV = n.indeg_v, oU = n.outdeg_u, oV = n.outdeg_v;

        n.k_ul2 = (lU == 1 && oU == 1) ? 2 : 1;
        n.k_ur2 = (rU == 1 && oU == 1) ? 2 : 1;
        n.k_vl2 = (lV == 1 && oV == 1) ? 2 : 1;
        n.k_vr2 = (rV == 1 && oV == 1) ? 2 : 1;

        int a = std::min(oU, oV), b = std::max(oU, oV);
        n.gamma = static_cast<int8_t>(a + b - 2);

        if (iU == 2 && iV == 2) {
            if (a == 1 && b == 1) n.subtype = PSubtype::Pio2_11;
            else if (a == 1 && b == 2) n.subtype = PSubtype::Pio2_12;
            else if (a == 2 && b == 2) n.subtype = PSubtype::Pio2_22;
            else internal_error("unclassifiable P-node (io2 outdegrees)");
            n.rho = 0;
        } else if ((iU == 2 && iV == 3) || (iU == 3 && iV == 2)) {
            bool at_v = iV == 3;
            int d_two = at_v ? lV : lU;  // left child's indegree at the deg-3 pole
            bool d_is_l = d_two == 2;
            if (at_v ? oV != 1 : oU != 1) internal_error("in3 pole must have outdegree one");
            n.rho = d_is_l ? 0 : 1;
            if (a == 1 && b == 1)
                n.subtype = d_is_l ? PSubtype::Pio3l_11 : PSubtype::Pio3r_11;
            else if (a == 1 && b == 2)
                n.subtype = d_is_l ? PSubtype::Pio3l_12 : PSubtype::Pio3r_12;
            else
                internal_error("unclassifiable P-node (io3 outdegrees)");
        } else if (iU == 3 && iV == 3) {
            require(oU == 1 && oV == 1, "in3 poles must have outdegree one");
            bool du_l = lU == 2;
            bool dv_l = lV == 2;
            n.rho = static_cast<int8_t>((du_l ? 0 : 1) + (dv_l ? 0 : 1));
            n.subtype = du_l ? (dv_l ? PSubtype::Pin3_ll : PSubtype::Pin3_lr)
                             : (dv_l ? PSubtype::Pin3_rl : PSubtype::Pin3_rr);
            require(n.gamma == 0, "in3 gamma");
        } else {
            internal_error("unclassifiable P-node (pole indegrees)");
        }
    }
}

std::string tree_dump(const SPQTree& tree, const PlaneSPGraph& g) {
    (void)g;
    std::string out;
    std::vector<std::pair<int32_t, int>> st{{tree.root, 0}};
    while (!st.empty()) {
        auto [id, depth] = st.back();
        st.pop_back();
        const SpqNode& n = tree.at(id);
        out.append(static_cast<std::size_t>(2 * depth), ' ');
        out += std::to_string(id);
        out += ' ';
        out += to_string(n.kind);
        if (n.kind == NodeKind::Qstar) {
            out += "(" + std::to_string(n.length) + (n.dummy_q ? ",dummy)" : ")");
        }
        out += " poles=" + std::to_string(n.pole_u) + "," + std::to_string(n.pole_v);
        out += " indeg=" + std::to_string(n.indeg_u) + "/" + std::to_string(n.indeg_v);
        out += " outdeg=" + std::to_string(n.outdeg_u) + "/" + std::to_string(n.outdeg_v);
        if (n.subtype != PSubtype::None) {
            out += " subtype=";
            out += to_string(n.subtype);
        }
        if (!n.ival.is_empty() || n.kind != NodeKind::Proot) out += " I=" + n.ival.str();
        out += '\n';
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
            st.push_back({*it, depth + 1});
    }
    return out;
}

}  // namespace rlp
