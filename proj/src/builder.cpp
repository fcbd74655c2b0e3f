#include "rlp/builder.hpp"

#include <algorithm>

namespace rlp {

int64_t pick_root_sigma2(const Interval& feasible) {
    require(!feasible.is_empty(), "cannot pick from an empty window");
    if (feasible.lo2() > 0) return feasible.lo2();
    if (feasible.hi2() < 0) return feasible.hi2();
    if (feasible.semi_integer()) return feasible.contains2(1) ? 1 : -1;
    return 0;
}

void assign_spiralities(Verdict& v) { assign_spiralities(v, pick_root_sigma2(v.feasible)); }

void assign_spiralities(Verdict& v, int64_t sigma_eta2) {
    require(v.accepted, "assignment needs an accepted verdict");
    require(v.feasible.contains2(sigma_eta2), "root spirality outside the feasible window");
    SPQTree& tree = v.tree;
    SpqNode& eta = tree.at(tree.eta);
    eta.sigma2 = sigma_eta2;
    eta.sigma_set = true;
    SpqNode& ref = tree.at(tree.ref);
    ref.sigma2 = 0;  // the reference edge is drawn straight
    ref.sigma_set = true;

    std::vector<int32_t> stack{tree.eta};
    while (!stack.empty()) {
        int32_t id = stack.back();
        stack.pop_back();
        SpqNode& n = tree.at(id);
        require(n.sigma_set && n.ival.contains2(n.sigma2), "spirality outside the interval");
        switch (n.kind) {
            case NodeKind::Qstar:
                continue;
            case NodeKind::Proot:
                internal_error("root reached in top-down assignment");
            case NodeKind::S: {
                // start every child at its maximum and drain the slack
                int64_t s2 = -n.sigma2;
                for (int32_t c : n.children) s2 += tree.at(c).ival.hi2();
                require(s2 >= 0, "series slack must be nonnegative");
                for (int32_t c : n.children) {
                    SpqNode& ch = tree.at(c);
                    int64_t width = ch.ival.hi2() - ch.ival.lo2();
                    int64_t d = std::min(s2, width);
                    ch.sigma2 = ch.ival.hi2() - d;
                    ch.sigma_set = true;
                    s2 -= d;
                }
                require(s2 == 0, "series slack not drained");
                break;
            }
            case NodeKind::P: {
                if (n.children.size() == 3) {
                    static const int64_t off[3] = {4, 0, -4};
                    for (int i = 0; i < 3; ++i) {
                        SpqNode& ch = tree.at(n.children[i]);
                        ch.sigma2 = n.sigma2 + off[i];
                        ch.sigma_set = true;
                    }
                    break;
                }
                SpqNode& cl = tree.at(n.children[0]);
                SpqNode& cr = tree.at(n.children[1]);
                int deg_u = n.indeg_u + n.outdeg_u;
                int deg_v = n.indeg_v + n.outdeg_v;
                bool found = false;
                for (int bits = 0; bits < 16 && !found; ++bits) {
                    int aul = (bits >> 3) & 1, avl = (bits >> 2) & 1;
                    int aur = (bits >> 1) & 1, avr = bits & 1;
                    if (deg_u == 4 && (aul != 1 || aur != 1)) continue;
                    if (deg_v == 4 && (avl != 1 || avr != 1)) continue;
                    if (deg_u == 3 && aul + aur == 0) continue;
                    if (deg_v == 3 && avl + avr == 0) continue;
                    int64_t sl = n.sigma2 + n.k_ul2 * aul + n.k_vl2 * avl;
                    int64_t sr = n.sigma2 - n.k_ur2 * aur - n.k_vr2 * avr;
                    if (!cl.ival.contains2(sl) || !cr.ival.contains2(sr)) continue;
                    n.a_ul = static_cast<int8_t>(aul);
                    n.a_vl = static_cast<int8_t>(avl);
                    n.a_ur = static_cast<int8_t>(aur);
                    n.a_vr = static_cast<int8_t>(avr);
                    cl.sigma2 = sl;
                    cr.sigma2 = sr;
                    cl.sigma_set = cr.sigma_set = true;
                    found = true;
                }
                require(found, "no alpha combination realizes the P-node spirality");
                break;
            }
        }
        for (int32_t c : n.children) stack.push_back(c);
    }
}

namespace {

void write_corner(OrthoRep& rep, int32_t v, int slot, int angle) {
    int16_t& a = rep.angle[v][slot];
    if (a < 0) {
        a = static_cast<int16_t>(angle);
        return;
    }
    require(a == angle, "conflicting corner assignments");
}

}  // namespace

Realization synthesize(const Verdict& v) {
    const SPQTree& tree = v.tree;
    const PlaneSPGraph& g = v.graph;
    Realization out;
    out.g_aug = g;
    OrthoRep& rep = out.rep_aug;
    rep.angle.resize(g.n);
    for (int32_t x = 0; x < g.n; ++x) rep.angle[x].assign(g.rotation[x].size(), -1);

    // degree-4 vertices have no freedom
    for (int32_t x = 0; x < g.n; ++x)
        if (g.degree(x) == 4)
            for (int i = 0; i < 4; ++i) write_corner(rep, x, i, 90);

    for (int32_t id : tree.pre_order()) {
        const SpqNode& n = tree.at(id);
        if (n.kind == NodeKind::Qstar) {
            require(n.sigma_set, "unassigned chain");
            // |sigma| same-direction turns at the first |sigma| inner
            // vertices walking from the source pole
            int64_t remaining = std::llabs(n.sigma2) / 2;
            int dir = n.sigma2 > 0 ? +1 : -1;
            for (int32_t e = n.edge_lo; e + 1 < n.edge_hi; ++e) {
                int32_t x = g.edges[e].second;
                int right_slot = g.slot_of(e, x);
                int left_slot = 1 - right_slot;
                if (remaining > 0) {
                    write_corner(rep, x, right_slot, dir > 0 ? 90 : 270);
                    write_corner(rep, x, left_slot, dir > 0 ? 270 : 90);
                    --remaining;
                } else {
                    write_corner(rep, x, right_slot, 180);
                    write_corner(rep, x, left_slot, 180);
                }
            }
            require(remaining == 0, "chain too short for its spirality");
            continue;
        }
        if (n.kind != NodeKind::P || n.children.size() != 2) continue;
        // alpha corners of a two-child P-node at its degree-3 poles
        for (int side = 0; side < 2; ++side) {
            int32_t w = side == 0 ? n.pole_u : n.pole_v;
            if (g.degree(w) != 3) continue;
            bool is_source = side == 0;
            int al = is_source ? n.a_ul : n.a_vl;
            int ar = is_source ? n.a_ur : n.a_vr;
            auto pert = [&](int32_t e) { return e >= n.edge_lo && e < n.edge_hi; };
            int deg = 3;
            int start = -1;
            for (int i = 0; i < deg; ++i) {
                int prev = (i + deg - 1) % deg;
                if (pert(g.rotation[w][i]) && !pert(g.rotation[w][prev])) start = i;
            }
            require(start >= 0, "P-node pole arc not found");
            int m_slot = start;
            int lx_slot, rx_slot;
            if (is_source) {
                lx_slot = (start + 1) % deg;
                rx_slot = (start + 2) % deg;
            } else {
                lx_slot = (start + 2) % deg;
                rx_slot = (start + 1) % deg;
            }
            write_corner(rep, w, m_slot, 90 * (al + ar));
            write_corner(rep, w, lx_slot, 180 - 90 * al);
            write_corner(rep, w, rx_slot, 180 - 90 * ar);
        }
    }

    // reference-edge corners at poles the component reaches with one edge
    const SpqNode& eta = tree.at(tree.eta);
    require((eta.sigma2 & 1) == 0, "root-child spirality must be an integer");
    int64_t s0 = 4 - eta.sigma2 / 2;
    for (int side = 0; side < 2; ++side) {
        int32_t w = side == 0 ? g.s : g.t;
        int indeg = side == 0 ? eta.indeg_u : eta.indeg_v;
        if (indeg != 1) continue;
        require(g.degree(w) == 2, "reference pole degree");
        if (g.ref_is_dummy) {
            write_corner(rep, w, 0, 180);
            write_corner(rep, w, 1, 180);
            continue;
        }
        int64_t a = std::clamp<int64_t>(s0, -1, 1);
        s0 -= a;
        // the internal-face corner sits counterclockwise after the reference
        // edge at the source pole and before it at the sink pole; for a
        // degree-2 pole both map to slot 0
        write_corner(rep, w, 0, static_cast<int>(180 - 90 * a));
        write_corner(rep, w, 1, static_cast<int>(180 + 90 * a));
    }
    require(g.ref_is_dummy || s0 == 0, "root angle budget not exhausted");

    for (int32_t x = 0; x < g.n; ++x) {
        int sum = 0;
        for (std::size_t i = 0; i < rep.angle[x].size(); ++i) {
            require(rep.angle[x][i] > 0, "unassigned corner after synthesis");
            sum += rep.angle[x][i];
        }
        require(sum == 360, "vertex angles do not close up");
    }

    if (!g.ref_is_dummy) {
        out.g_final = out.g_aug;
        out.rep_final = rep;
        return out;
    }

    // delete the dummy edge and merge the corners it separated
    out.g_final = g;
    out.g_final.edges.pop_back();
    out.g_final.ref_edge = -1;
    out.g_final.ref_is_dummy = false;
    out.rep_final.angle.resize(g.n);
    for (int32_t x = 0; x < g.n; ++x) {
        if (x != g.s && x != g.t) {
            out.rep_final.angle[x] = rep.angle[x];
            continue;
        }
        auto& rot = out.g_final.rotation[x];
        int slot = -1;
        for (std::size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == g.ref_edge) slot = static_cast<int>(i);
        require(slot >= 0, "dummy edge missing from pole rotation");
        int deg = static_cast<int>(rot.size());
        // the corner ending at the dummy fuses with the corner leaving it;
        // all other corners keep their edge pair
        std::vector<int16_t> merged(deg - 1);
        for (int j = 0; j < deg - 1; ++j) {
            int k = j < slot ? j : j + 1;
            int succ = (k + 1) % deg;
            merged[j] = succ == slot
                            ? static_cast<int16_t>(rep.angle[x][k] + rep.angle[x][slot])
                            : rep.angle[x][k];
        }
        rot.erase(rot.begin() + slot);
        out.rep_final.angle[x] = std::move(merged);
    }
    return out;
}

}  // namespace rlp
