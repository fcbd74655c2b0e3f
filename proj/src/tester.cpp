#include "rlp/tester.hpp"

namespace rlp {

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::None: return "none";
        case RejectReason::P3Row: return "P3 intersection";
        case RejectReason::Pio2Row: return "Pio2 condition";
        case RejectReason::Pio3Row: return "Pio3d condition";
        case RejectReason::Pin3Row: return "Pin3dd' condition";
        case RejectReason::RootCondition: return "root condition";
    }
    return "?";
}

namespace {

RejectReason reason_for(PSubtype s) {
    switch (s) {
        case PSubtype::Pio2_11:
        case PSubtype::Pio2_12:
        case PSubtype::Pio2_22: return RejectReason::Pio2Row;
        case PSubtype::Pio3l_11:
        case PSubtype::Pio3r_11:
        case PSubtype::Pio3l_12:
        case PSubtype::Pio3r_12: return RejectReason::Pio3Row;
        default: return RejectReason::Pin3Row;
    }
}

}  // namespace

std::optional<Reject> compute_intervals(SPQTree& tree) {
    for (int32_t id : tree.post_order()) {
        SpqNode& n = tree.at(id);
        switch (n.kind) {
            case NodeKind::Proot:
                continue;
            case NodeKind::Qstar:
                n.ival = q_interval(n.length);
                break;
            case NodeKind::S: {
                std::vector<Interval> kids;
                kids.reserve(n.children.size());
                for (int32_t c : n.children) kids.push_back(tree.at(c).ival);
                n.ival = s_interval(kids);
                break;
            }
            case NodeKind::P: {
                if (n.children.size() == 3) {
                    n.ival = p3_interval(tree.at(n.children[0]).ival, tree.at(n.children[1]).ival,
                                         tree.at(n.children[2]).ival);
                    if (n.ival.is_empty()) return Reject{id, RejectReason::P3Row};
                } else {
                    n.ival = p2_interval(n.subtype, n.gamma, n.rho, tree.at(n.children[0]).ival,
                                         tree.at(n.children[1]).ival);
                    if (n.ival.is_empty()) return Reject{id, reason_for(n.subtype)};
                }
                break;
            }
        }
        require(n.ival.is_empty() ||
                    (n.ival.semi_integer() == !integer_spirality(n)),
                "interval parity disagrees with the alias-vertex rule");
    }
    return std::nullopt;
}

RootAliasConfig root_alias_config(const SPQTree& tree) {
    const SpqNode& eta = tree.at(tree.eta);
    int coincide = (eta.indeg_u == 1 ? 1 : 0) + (eta.indeg_v == 1 ? 1 : 0);
    switch (coincide) {
        case 2: return RootAliasConfig::BothCoincide;
        case 1: return RootAliasConfig::OneCoincides;
        default: return RootAliasConfig::NoneCoincide;
    }
}

Interval test_root(const Interval& i_eta, const Interval& delta, bool ref_is_dummy) {
    require(!i_eta.is_empty(), "root test needs a representable eta");
    if (ref_is_dummy) return i_eta;
    return i_eta.intersect(delta);
}

Verdict run_test(const SPTerm& input) {
    Verdict v;
    SPTerm canon = canonicalize(input);
    require_valid_degrees(canon);
    OrientedTerm oriented = orient_for_reference(canon);
    v.term = std::move(oriented.term);
    v.mirror_used = oriented.mirror_used;
    v.graph = to_plane_graph(v.term);
    choose_reference_edge(v.term, v.graph);
    v.tree = build_spq_tree(v.term, v.graph);
    classify_p_nodes(v.tree, v.graph);

    if (auto rej = compute_intervals(v.tree)) {
        v.accepted = false;
        v.reject = *rej;
        return v;
    }
    Interval delta = root_delta(root_alias_config(v.tree));
    Interval feasible = test_root(v.tree.at(v.tree.eta).ival, delta, v.graph.ref_is_dummy);
    if (feasible.is_empty()) {
        v.accepted = false;
        v.reject = Reject{v.tree.eta, RejectReason::RootCondition};
        return v;
    }
    v.accepted = true;
    v.feasible = feasible;
    return v;
}

}  // namespace rlp
