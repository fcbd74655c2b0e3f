#include "doctest.h"

#include "rlp/tester.hpp"

using namespace rlp;

TEST_CASE("canonical fixtures") {
    // triangle
    {
        Verdict v = run_test(parse_spterm("P(Q1,S(Q1,Q1))"));
        CHECK_FALSE(v.accepted);
        CHECK(v.reject.reason == RejectReason::RootCondition);
    }
    // square
    {
        Verdict v = run_test(parse_spterm("P(Q2,Q2)"));
        CHECK(v.accepted);
        CHECK(v.feasible == Interval::ints(-1, 1));
    }
    // three parallel unit edges: re-rooted into a two-child P that fails
    {
        Verdict v = run_test(parse_spterm("P(Q1,Q1,Q1)"));
        CHECK_FALSE(v.accepted);
        CHECK(v.reject.reason == RejectReason::Pio2Row);
    }
    // theta graph of three length-2 chains: fails at the P3 node
    {
        Verdict v = run_test(parse_spterm("P(Q2,Q2,Q2)"));
        CHECK_FALSE(v.accepted);
        CHECK(v.reject.reason == RejectReason::P3Row);
        CHECK(v.tree.at(v.reject.node).kind == NodeKind::P);
        CHECK(v.tree.at(v.reject.node).children.size() == 3);
    }
    // embedded P3 over three unit edges rejects at that node too
    {
        Verdict v = run_test(parse_spterm("S(Q1,P(Q1,Q1,Q1),Q1)"));
        CHECK_FALSE(v.accepted);
        CHECK(v.reject.reason == RejectReason::P3Row);
    }
}

TEST_CASE("simple accepts") {
    for (const char* s : {"Q1", "Q5", "S(Q1,Q1)", "P(Q1,Q3)", "P(Q2,Q3)", "P(Q4,Q2,Q2)"}) {
        CAPTURE(s);
        CHECK(run_test(parse_spterm(s)).accepted);
    }
}

TEST_CASE("simple rejects") {
    for (const char* s : {"P(Q1,Q1)", "P(Q1,Q2)", "P(Q2,Q2,Q2)", "P(Q1,Q1,Q2)", "P(Q1,Q2,Q2)"}) {
        CAPTURE(s);
        CHECK_FALSE(run_test(parse_spterm(s)).accepted);
    }
}

TEST_CASE("intervals for the triangle tree") {
    Verdict v = run_test(parse_spterm("P(Q1,S(Q1,Q1))"));
    CHECK(v.tree.at(v.tree.eta).ival == Interval::ints(-1, 1));
    CHECK(root_alias_config(v.tree) == RootAliasConfig::BothCoincide);
}

TEST_CASE("4-cycle accepted through the dummy rooting") {
    Verdict v = run_test(parse_spterm("P(Q2,Q2)"));
    CHECK(v.graph.ref_is_dummy);
    CHECK(v.tree.at(v.tree.eta).subtype == PSubtype::Pio2_11);
    CHECK(v.tree.at(v.tree.eta).ival == Interval::ints(-1, 1));
}

TEST_CASE("early exit reports the first post-order failure") {
    // two failing P3 nodes separated by unit chains
    Verdict v = run_test(parse_spterm("S(Q1,P(Q1,Q1,Q1),Q1,P(Q1,Q1,Q1),Q1)"));
    CHECK_FALSE(v.accepted);
    Verdict w = run_test(parse_spterm("S(Q1,P(Q1,Q1,Q1),Q1,P(Q1,Q1,Q1),Q1)"));
    CHECK(v.reject.node == w.reject.node);
    CHECK(v.reject.reason == w.reject.reason);
    // the rejecting node is the first P-node in post-order
    const SpqNode& rejected = v.tree.at(v.reject.node);
    for (int32_t id : v.tree.post_order()) {
        if (id == v.reject.node) break;
        CHECK(v.tree.at(id).kind != rejected.kind);
    }
}

TEST_CASE("degree violations surface as input errors") {
    CHECK_THROWS_AS(run_test(parse_spterm("S(P(Q1,Q1,Q1),P(Q1,Q1,Q1))")), DegreeViolation);
}

TEST_CASE("mirror invariance of the verdict") {
    for (const char* s : {"P(Q1,S(Q1,Q1))", "P(Q2,Q2)", "P(Q1,Q2,Q2)", "S(Q2,P(Q1,Q2),Q1)",
                          "P(S(Q1,P(Q1,Q1,Q1),Q1),Q1)", "P(Q3,S(Q1,P(Q2,Q2)))"}) {
        CAPTURE(s);
        SPTerm t = parse_spterm(s);
        CHECK(run_test(t).accepted == run_test(mirrored(t)).accepted);
    }
}
