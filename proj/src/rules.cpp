#include "rlp/rules.hpp"

#include <algorithm>

namespace rlp {

Interval q_interval(int64_t length) {
    require(length >= 1, "chain length must be positive");
    return Interval::ints(-(length - 1), length - 1);
}

Interval s_interval(const std::vector<Interval>& children) {
    require(children.size() >= 2, "series interval needs at least two children");
    int64_t lo = 0, hi = 0;
    for (const Interval& c : children) {
        require(!c.is_empty(), "series child interval is empty");
        lo += c.lo2();
        hi += c.hi2();
    }
    return Interval::halves(lo, hi);
}

Interval p3_interval(const Interval& il, const Interval& ic, const Interval& ir) {
    require(!il.is_empty() && !ic.is_empty() && !ir.is_empty(), "P3 child interval is empty");
    require(!il.semi_integer() && !ic.semi_integer() && !ir.semi_integer(),
            "P3 children carry integer spirality");
    int64_t lo = std::max({il.lo2() - 4, ic.lo2(), ir.lo2() + 4});
    int64_t hi = std::min({il.hi2() - 4, ic.hi2(), ir.hi2() + 4});
    if (lo > hi) return Interval::empty();
    return Interval::halves(lo, hi);
}

Interval p2_interval(PSubtype subtype, int gamma, int rho, const Interval& il,
                     const Interval& ir) {
    require(!il.is_empty() && !ir.is_empty(), "P2 child interval is empty");
    const int64_t ml = il.lo2(), Ml = il.hi2(), mr = ir.lo2(), Mr = ir.hi2();
    const int64_t g2 = 2 * gamma;
    // achievable sigma_l - sigma_r differences form [ml-Mr, Ml-mr] stepping by 1
    const int64_t dlo = ml - Mr, dhi = Ml - mr;

    int64_t lo = 0, hi = 0;
    switch (subtype) {
        case PSubtype::Pio2_11:
        case PSubtype::Pio2_12:
        case PSubtype::Pio2_22:
            if (dlo > 8 - g2 || dhi < 4) return Interval::empty();
            lo = std::max(ml - 4, mr) + gamma;
            hi = std::min(Ml, Mr + 4) - gamma;
            break;
        case PSubtype::Pio3l_11:
        case PSubtype::Pio3r_11:
        case PSubtype::Pio3l_12:
        case PSubtype::Pio3r_12:
            if (dlo > 7 - g2 || dhi < 5) return Interval::empty();
            lo = std::max(ml - 3, mr + 2) + gamma - rho;
            hi = std::min(Ml - 1, Mr + 4) - gamma - rho;
            break;
        case PSubtype::Pin3_ll:
        case PSubtype::Pin3_lr:
        case PSubtype::Pin3_rl:
        case PSubtype::Pin3_rr:
            if (dlo > 6 || dhi < 6) return Interval::empty();
            lo = std::max(ml - 2, mr + 4) - rho;
            hi = std::min(Ml - 2, Mr + 4) - rho;
            break;
        default:
            internal_error("p2_interval on a non-P2 subtype");
    }
    require(lo <= hi, "P2 condition holds but the row interval is empty");
    return Interval::halves(lo, hi);
}

Interval root_delta(RootAliasConfig cfg) {
    switch (cfg) {
        case RootAliasConfig::BothCoincide: return Interval::ints(2, 6);
        case RootAliasConfig::OneCoincides: return Interval::ints(3, 5);
        case RootAliasConfig::NoneCoincide: return Interval::ints(4, 4);
    }
    internal_error("bad alias configuration");
}

}  // namespace rlp
