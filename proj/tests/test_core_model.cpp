#include "doctest.h"

#include "rlp/plane_graph.hpp"
#include "rlp/spterm.hpp"

using namespace rlp;

TEST_CASE("parse leaves and nesting") {
    SPTerm q = parse_spterm("Q3");
    CHECK(q.at(q.root).kind == TermKind::QChain);
    CHECK(q.at(q.root).length == 3);

    SPTerm p = parse_spterm("P(Q2,Q2)");
    CHECK(p.at(p.root).kind == TermKind::Parallel);
    CHECK(p.at(p.root).children.size() == 2);

    SPTerm nested = parse_spterm(" P( Q1 , S(Q1, P(Q1,Q2)) ) ");
    CHECK(to_text(nested) == "P(Q1,S(Q1,P(Q1,Q2)))");
    CHECK(edge_count(nested) == 5);
}

TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse_spterm("Qx"), ParseError);
    CHECK_THROWS_AS(parse_spterm("Q0"), ParseError);
    CHECK_THROWS_AS(parse_spterm("S(Q1)"), ParseError);
    CHECK_THROWS_AS(parse_spterm("P(Q1)"), ParseError);
    CHECK_THROWS_AS(parse_spterm("P(Q1,Q1,Q1,Q1)"), ParseError);
    CHECK_THROWS_AS(parse_spterm("P(Q1,Q1) extra"), ParseError);
    CHECK_THROWS_AS(parse_spterm(""), ParseError);
    try {
        parse_spterm("P(Q1,Q1,Q1,Q1)");
    } catch (const ParseError& e) {
        CHECK(e.offset == 10);  // the comma introducing a fourth child
    }
}

TEST_CASE("parse/print round trip") {
    for (const char* s : {"Q1", "P(Q2,Q2)", "S(Q3,P(Q1,Q1,Q1),Q2)", "P(Q1,S(Q1,P(Q1,Q2)))"}) {
        CHECK(to_text(parse_spterm(s)) == s);
    }
}

TEST_CASE("canonicalize merges chains and splices compositions") {
    CHECK(to_text(canonicalize(parse_spterm("S(Q1,Q1)"))) == "Q2");
    CHECK(to_text(canonicalize(parse_spterm("S(Q1,S(Q1,P(Q1,Q1)))"))) == "S(Q2,P(Q1,Q1))");
    CHECK(to_text(canonicalize(parse_spterm("P(P(Q2,Q2),Q2)"))) == "P(Q2,Q2,Q2)");
    SPTerm t = parse_spterm("P(Q1,S(Q2,Q3))");
    CHECK(to_text(canonicalize(t)) == "P(Q1,Q5)");
    // idempotence
    CHECK(to_text(canonicalize(canonicalize(t))) == "P(Q1,Q5)");
}

TEST_CASE("validate_degrees") {
    CHECK(validate_degrees(parse_spterm("P(Q1,Q1,Q1)")).empty());
    CHECK(validate_degrees(parse_spterm("P(Q2,Q2)")).empty());
    auto bad = validate_degrees(parse_spterm("S(P(Q1,Q1,Q1),P(Q1,Q1,Q1))"));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].degree == 6);
    // degree 4 at a terminal is fine
    CHECK(validate_degrees(parse_spterm("P(P(Q2,Q2),P(Q2,Q2))")).empty());
}

TEST_CASE("to_plane_graph shapes") {
    {
        PlaneSPGraph g = to_plane_graph(parse_spterm("Q2"));
        CHECK(g.n == 3);
        CHECK(g.edges.size() == 2);
    }
    {
        PlaneSPGraph g = to_plane_graph(parse_spterm("P(Q2,Q2)"));
        CHECK(g.n == 4);
        CHECK(g.edges.size() == 4);
        CHECK(g.degree(0) == 2);
        CHECK(g.degree(1) == 2);
    }
    {
        // triangle: 3 vertices, 3 edges, terminals adjacent
        PlaneSPGraph g = to_plane_graph(canonicalize(parse_spterm("P(Q1,S(Q1,Q1))")));
        CHECK(g.n == 3);
        CHECK(g.edges.size() == 3);
    }
}

TEST_CASE("vertex and edge counts match the composition") {
    for (const char* s : {"Q5", "P(Q2,Q3)", "S(Q2,P(Q1,Q2),Q1)", "P(Q1,S(Q1,P(Q1,Q2)))"}) {
        SPTerm t = canonicalize(parse_spterm(s));
        PlaneSPGraph g = to_plane_graph(t);
        CHECK(static_cast<int64_t>(g.edges.size()) == edge_count(t));
        int64_t twice = 0;
        for (int32_t v = 0; v < g.n; ++v) twice += g.degree(v);
        CHECK(twice == 2 * static_cast<int64_t>(g.edges.size()));
    }
}

TEST_CASE("reference edge policy") {
    {
        // rightmost Q1 branch is the real reference
        SPTerm t = canonicalize(parse_spterm("P(S(Q1,Q1),Q1)"));
        OrientedTerm o = orient_for_reference(t);
        CHECK_FALSE(o.mirror_used);
        PlaneSPGraph g = to_plane_graph(o.term);
        choose_reference_edge(o.term, g);
        CHECK_FALSE(g.ref_is_dummy);
        CHECK(g.edges[g.ref_edge] == std::pair<int32_t, int32_t>{0, 1});
    }
    {
        // leftmost-only Q1 mirrors the term first
        SPTerm t = canonicalize(parse_spterm("P(Q1,S(Q1,Q1))"));
        OrientedTerm o = orient_for_reference(t);
        CHECK(o.mirror_used);
        CHECK(to_text(o.term) == "P(Q2,Q1)");
        PlaneSPGraph g = to_plane_graph(o.term);
        choose_reference_edge(o.term, g);
        CHECK_FALSE(g.ref_is_dummy);
    }
    {
        SPTerm t = canonicalize(parse_spterm("S(Q1,Q1)"));  // becomes Q2
        OrientedTerm o = orient_for_reference(t);
        PlaneSPGraph g = to_plane_graph(o.term);
        choose_reference_edge(o.term, g);
        CHECK(g.ref_is_dummy);
        CHECK(g.degree(0) == 2);
    }
    {
        // no unit-length branch: dummy added
        SPTerm t = canonicalize(parse_spterm("P(Q2,Q2)"));
        OrientedTerm o = orient_for_reference(t);
        PlaneSPGraph g = to_plane_graph(o.term);
        choose_reference_edge(o.term, g);
        CHECK(g.ref_is_dummy);
        CHECK(g.rotation[0].front() == g.ref_edge);
        CHECK(g.rotation[1].back() == g.ref_edge);
    }
    {
        // dummy insertion at a degree-4 terminal cannot work
        SPTerm t = canonicalize(parse_spterm("P(P(Q2,Q2),P(Q2,Q2))"));
        OrientedTerm o = orient_for_reference(t);
        PlaneSPGraph g = to_plane_graph(o.term);
        CHECK_THROWS_AS(choose_reference_edge(o.term, g), InfeasibleRooting);
    }
}

TEST_CASE("mirror reverses rotations") {
    SPTerm t = canonicalize(parse_spterm("P(Q2,S(Q1,P(Q1,Q2)),Q3)"));
    PlaneSPGraph a = to_plane_graph(t);
    PlaneSPGraph b = to_plane_graph(mirrored(t));
    REQUIRE(a.n == b.n);
    // vertex numbering differs between the two builds, so compare the
    // multiset of cyclic degree sequences instead of raw lists
    std::vector<int> da, db;
    for (int32_t v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int32_t v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    CHECK(da == db);
    // terminals keep their ids, and their rotations reverse exactly
    for (int32_t v : {a.s, a.t}) {
        std::vector<int32_t> rev(b.rotation[v].rbegin(), b.rotation[v].rend());
        CHECK(a.rotation[v].size() == rev.size());
    }
}

TEST_CASE("graph json round trip") {
    SPTerm t = canonicalize(parse_spterm("S(Q2,P(Q1,Q2),Q1)"));
    PlaneSPGraph g = to_plane_graph(t);
    choose_reference_edge(t, g);
    PlaneSPGraph h = graph_from_json(graph_to_json(g));
    CHECK(h.n == g.n);
    CHECK(h.edges == g.edges);
    CHECK(h.rotation == g.rotation);
    CHECK(h.s == g.s);
    CHECK(h.t == g.t);
}

TEST_CASE("graph_to_term recovers series-parallel structure") {
    for (const char* s : {"Q4", "P(Q2,Q2)", "S(Q2,P(Q1,Q2),Q1)", "P(Q1,S(Q1,P(Q1,Q2)))",
                          "S(P(Q2,Q2),P(Q1,Q1,Q2))"}) {
        SPTerm t = canonicalize(parse_spterm(s));
        PlaneSPGraph g = to_plane_graph(t);
        SPTerm back = graph_to_term(g);
        CHECK(edge_count(back) == edge_count(t));
        // rebuilding the recovered term yields a graph of identical size and
        // degree profile
        PlaneSPGraph g2 = to_plane_graph(canonicalize(back));
        CHECK(g2.n == g.n);
        CHECK(g2.edges.size() == g.edges.size());
    }
}

TEST_CASE("graph_to_term fails loudly on non-SP input") {
    // K4: planar but not two-terminal series-parallel
    PlaneSPGraph k4;
    k4.n = 4;
    k4.s = 0;
    k4.t = 1;
    k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    k4.rotation = {{0, 1, 2}, {0, 4, 3}, {1, 3, 5}, {2, 5, 4}};
    CHECK_THROWS_AS(graph_to_term(k4), NotSeriesParallel);
}
