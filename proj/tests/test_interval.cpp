#include "doctest.h"

#include <random>

#include "rlp/rules.hpp"

using namespace rlp;

TEST_CASE("half formatting") {
    CHECK(half_str(4) == "2");
    CHECK(half_str(-3) == "-3/2");
    CHECK(half_str(0) == "0");
    CHECK(Interval::halves(-3, 3).str() == "[-3/2,3/2]");
    CHECK(Interval::empty().str() == "[]");
}

TEST_CASE("q_interval") {
    CHECK(q_interval(1) == Interval::ints(0, 0));
    CHECK(q_interval(4) == Interval::ints(-3, 3));
    CHECK(q_interval(2) == Interval::ints(-1, 1));
}

TEST_CASE("s_interval") {
    CHECK(s_interval({Interval::ints(0, 0), Interval::ints(0, 0)}) == Interval::ints(0, 0));
    CHECK(s_interval({Interval::ints(-1, 1), Interval::ints(-2, 2), Interval::ints(0, 0)}) ==
          Interval::ints(-3, 3));
    // semi-integer + integer children give a semi-integer sum
    CHECK(s_interval({Interval::halves(-1, 1), Interval::ints(-1, 1)}) == Interval::halves(-3, 3));
}

TEST_CASE("p3_interval") {
    CHECK(p3_interval(Interval::ints(-1, 3), Interval::ints(-2, 2), Interval::ints(-3, 1)) ==
          Interval::ints(-1, 1));
    CHECK(p3_interval(Interval::ints(0, 0), Interval::ints(0, 0), Interval::ints(0, 0)).is_empty());
    CHECK(p3_interval(Interval::ints(-2, 2), Interval::ints(-2, 2), Interval::ints(-2, 2)) ==
          Interval::ints(0, 0));
    // the canonical theta rejection: three [-1,1] branches
    CHECK(p3_interval(Interval::ints(-1, 1), Interval::ints(-1, 1), Interval::ints(-1, 1)).is_empty());
}

TEST_CASE("p2_interval rows") {
    // Pio2_22 with I_l=[1,1], I_r=[-1,-1] -> [0,0]
    CHECK(p2_interval(PSubtype::Pio2_22, 2, 0, Interval::ints(1, 1), Interval::ints(-1, -1)) ==
          Interval::ints(0, 0));
    // difference interval [0,0] misses the required {2}
    CHECK(p2_interval(PSubtype::Pio2_22, 2, 0, Interval::ints(0, 0), Interval::ints(0, 0)).is_empty());
    // Pin3_lr with rho sum 1: I_l=[2,2], I_r=[-1,-1] -> [1/2,1/2]
    CHECK(p2_interval(PSubtype::Pin3_lr, 0, 1, Interval::ints(2, 2), Interval::ints(-1, -1)) ==
          Interval::halves(1, 1));
    // Pio2_11 of two single edges: condition {0} vs [2,4] fails even though
    // the raw interval formula would be nonempty
    CHECK(p2_interval(PSubtype::Pio2_11, 0, 0, Interval::ints(0, 0), Interval::ints(0, 0)).is_empty());
}

TEST_CASE("root_delta") {
    CHECK(root_delta(RootAliasConfig::BothCoincide) == Interval::ints(2, 6));
    CHECK(root_delta(RootAliasConfig::OneCoincides) == Interval::ints(3, 5));
    CHECK(root_delta(RootAliasConfig::NoneCoincide) == Interval::ints(4, 4));
}

namespace {

Interval widen(std::mt19937_64& rng, const Interval& i) {
    int64_t dlo = static_cast<int64_t>(rng() % 3) * 2;
    int64_t dhi = static_cast<int64_t>(rng() % 3) * 2;
    return Interval::halves(i.lo2() - dlo, i.hi2() + dhi);
}

bool subset(const Interval& a, const Interval& b) {
    if (a.is_empty()) return true;
    if (b.is_empty()) return false;
    return b.lo2() <= a.lo2() && a.hi2() <= b.hi2();
}

}  // namespace

TEST_CASE("monotonicity: widening children never shrinks the parent") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        auto rnd_int_interval = [&](bool semi) {
            int64_t lo = static_cast<int64_t>(rng() % 9) - 4;
            int64_t w = static_cast<int64_t>(rng() % 4);
            return Interval::halves(2 * lo + (semi ? 1 : 0), 2 * (lo + w) + (semi ? 1 : 0));
        };
        SUBCASE("") {}
        // P3
        {
            Interval a = rnd_int_interval(false), b = rnd_int_interval(false),
                     c = rnd_int_interval(false);
            Interval narrow = p3_interval(a, b, c);
            Interval wide = p3_interval(widen(rng, a), widen(rng, b), widen(rng, c));
            CHECK(subset(narrow, wide));
        }
        // S
        {
            Interval a = rnd_int_interval(false), b = rnd_int_interval(rng() & 1);
            Interval narrow = s_interval({a, b});
            Interval wide = s_interval({widen(rng, a), widen(rng, b)});
            CHECK(subset(narrow, wide));
        }
        // P2 rows: children of a Pio2 node are integer-valued
        {
            Interval a = rnd_int_interval(false), b = rnd_int_interval(false);
            int gamma = static_cast<int>(rng() % 3);
            PSubtype st = gamma == 0   ? PSubtype::Pio2_11
                          : gamma == 1 ? PSubtype::Pio2_12
                                       : PSubtype::Pio2_22;
            Interval narrow = p2_interval(st, gamma, 0, a, b);
            Interval wide = p2_interval(st, gamma, 0, widen(rng, a), widen(rng, b));
            CHECK(subset(narrow, wide));
        }
    }
}
