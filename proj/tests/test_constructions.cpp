#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "matchdim/constructions.hpp"
#include "matchdim/graph.hpp"
#include "matchdim/invariants.hpp"
#include "matchdim/verifier.hpp"

using namespace matchdim;

TEST_CASE("feasible") {
    CHECK(feasible(1, 1, 1, 1));
    CHECK_FALSE(feasible(1, 2, 3, 1));  // d = 1 < 2(c-b) = 2
    CHECK_FALSE(feasible(2, 2, 5, 9));  // c = 5 > 2b = 4
    CHECK_FALSE(feasible(3, 2, 2, 3));  // a > b
    CHECK_THROWS_AS(feasible(0, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(feasible(1, 1, 1, -2), std::invalid_argument);
}

TEST_CASE("dispatch_case") {
    CHECK(dispatch_case(1, 2, 2, 3) == CaseTag::C1);
    CHECK(dispatch_case(1, 2, 3, 2) == CaseTag::C2);
    CHECK(dispatch_case(1, 3, 4, 5) == CaseTag::C3);
    CHECK(dispatch_case(2, 3, 3, 2) == CaseTag::C4);
    CHECK(dispatch_case(2, 3, 3, 4) == CaseTag::C5);
    CHECK(dispatch_case(3, 4, 6, 5) == CaseTag::C6);  // 2(c-b) = 4 >= a = 3
    CHECK(dispatch_case(3, 4, 5, 4) == CaseTag::C7);  // a = 3 > 2(c-b) = 2
    // Equality 2(c-b) = a goes to case 6.
    CHECK(dispatch_case(2, 2, 3, 2) == CaseTag::C6);
    CHECK_THROWS_AS(dispatch_case(1, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("ConstructionParams::resolve") {
    const ConstructionParams params = ConstructionParams::resolve(3, 4, 6, 5);
    CHECK(params.a == 3);
    CHECK(params.d == 5);
    CHECK(params.case_tag == CaseTag::C6);
    CHECK_THROWS_AS(ConstructionParams::resolve(1, 2, 3, 1),
                    std::invalid_argument);
}

TEST_CASE("dispatch is total and consistent over a feasibility grid") {
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b)
            for (int c = b; c <= 2 * b; ++c)
                for (int d = 1; d <= 10; ++d) {
                    if (!feasible(a, b, c, d)) continue;
                    const CaseTag tag = dispatch_case(a, b, c, d);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(d);
                    switch (tag) {
                        case CaseTag::C1: CHECK((a == 1 && b == c)); break;
                        case CaseTag::C2:
                            CHECK((a == 1 && b < c && d == 2 * (c - b)));
                            break;
                        case CaseTag::C3:
                            CHECK((a == 1 && b < c && d > 2 * (c - b)));
                            break;
                        case CaseTag::C4: CHECK((a > 1 && b == c && d == a)); break;
                        case CaseTag::C5: CHECK((a > 1 && b == c && d > a)); break;
                        case CaseTag::C6:
                            CHECK((a > 1 && b < c && 2 * (c - b) >= a));
                            break;
                        case CaseTag::C7:
                            CHECK((a > 1 && b < c && a > 2 * (c - b)));
                            break;
                    }
                }
}

TEST_CASE("case 1: clique plus pendants on v_1") {
    const Graph g = build_case1(2, 3);
    CHECK(g.order() == 6);  // 2b + d - 1
    CHECK(g.edge_count() == 8);  // C(4,2) + 2
    CHECK(invariant_profile(g) == InvariantProfile{1, 2, 2, 3});

    CHECK(build_case1(1, 1) == with_edges(2, {{0, 1}}, {{0, "v_1"}, {1, "v_2"}}));
    CHECK_THROWS_AS(build_case1(0, 1), std::invalid_argument);
}

TEST_CASE("case 2: clique with two bipartite wings") {
    const Graph g = build_case2(2, 3);
    CHECK(g.order() == 6);  // 2c
    CHECK(g.edge_count() == 10);
    CHECK(invariant_profile(g) == InvariantProfile{1, 2, 3, 2});

    CHECK(build_case2(3, 4).order() == 8);
    CHECK_THROWS_AS(build_case2(2, 2), std::invalid_argument);  // needs b < c
    CHECK_THROWS_AS(build_case2(2, 5), std::invalid_argument);  // c > 2b
}

TEST_CASE("case 3: case 2 plus pendants") {
    const Graph g = build_case3(3, 4, 5);
    CHECK(g.order() == 11);  // 2b + d
    CHECK(invariant_profile(g) == InvariantProfile{1, 3, 4, 5});

    const Graph boundary = build_case3(2, 3, 3);  // single pendant
    CHECK(boundary.order() == build_case2(2, 3).order() + 1);
    CHECK(boundary.edge_count() == build_case2(2, 3).edge_count() + 1);
    CHECK_THROWS_AS(build_case3(2, 3, 2), std::invalid_argument);  // d too small
}

TEST_CASE("case 4: suspended matching plus clique") {
    const Graph g = build_case4(2, 3);
    CHECK(g.order() == 7);  // 2b + 1
    CHECK(g.edge_count() == 13);  // 1 + C(4,2) + 6
    CHECK(invariant_profile(g) == InvariantProfile{2, 3, 3, 2});

    const Graph small = build_case4(2, 2);
    CHECK(small.order() == 5);
    CHECK(small.edge_count() == 6);
    CHECK_THROWS_AS(build_case4(1, 3), std::invalid_argument);  // needs a > 1
}

TEST_CASE("case 4 equals the empty-set suspension of (a-1)K2 + K_{2(b-a+1)}") {
    for (int a = 2; a <= 4; ++a)
        for (int b = a; b <= 5; ++b) {
            std::vector<Graph> parts(a - 1, complete_graph(2));
            parts.push_back(complete_graph(2 * (b - a + 1)));
            const Graph suspended = s_suspension(disjoint_union(parts), {});
            const Graph built = build_case4(a, b);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(built.order() == suspended.order());
            CHECK(built.edges() == suspended.edges());
        }
}

TEST_CASE("case 5: apex on odd vertices only, plus pendants") {
    const Graph g = build_case5(2, 3, 4);
    CHECK(g.order() == 8);  // 2b + d - a
    CHECK(invariant_profile(g) == InvariantProfile{2, 3, 3, 4});

    const Graph boundary = build_case5(2, 2, 3);  // empty y-block
    CHECK(boundary.order() == 5);
    CHECK(invariant_profile(boundary) == InvariantProfile{2, 2, 2, 3});
    CHECK_THROWS_AS(build_case5(2, 3, 2), std::invalid_argument);  // needs d > a
}

TEST_CASE("case 6: complete bipartite join to the x-block") {
    const Graph g = build_case6(3, 4, 6, 5);
    CHECK(g.order() == 13);  // 8 + 4 + 1
    CHECK(invariant_profile(g) == InvariantProfile{3, 4, 6, 5});

    const Graph boundary = build_case6(2, 2, 3, 2);  // empty y-block
    CHECK(boundary.order() == 6);
    CHECK(invariant_profile(boundary) == InvariantProfile{2, 2, 3, 2});
    CHECK_THROWS_AS(build_case6(3, 4, 5, 4), std::invalid_argument);  // a > 2(c-b)
}

TEST_CASE("case 7: like case 6 with a d-a pendant block") {
    const Graph g = build_case7(3, 4, 5, 4);
    CHECK(g.order() == 11);  // 8 + 2 + 1
    CHECK(invariant_profile(g) == InvariantProfile{3, 4, 5, 4});

    const Graph boundary = build_case7(3, 3, 4, 3);  // empty y-block, d = a
    CHECK(boundary.order() == 8);
    CHECK(invariant_profile(boundary) == InvariantProfile{3, 3, 4, 3});
    CHECK_THROWS_AS(build_case7(2, 3, 5, 4), std::invalid_argument);  // 2(c-b) >= a
}

TEST_CASE("construct dispatches and realizes the profile") {
    CHECK(construct(1, 2, 2, 3) == build_case1(2, 3));
    CHECK(construct(2, 3, 3, 2) == build_case4(2, 3));
    CHECK(invariant_profile(construct(1, 1, 1, 5)) ==
          InvariantProfile{1, 1, 1, 5});
    CHECK(construct(1, 1, 1, 5).connected());

    CHECK_THROWS_WITH_AS(construct(1, 2, 3, 1),
                         doctest::Contains("d >= max{a, 2(c-b)} violated"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(construct(2, 2, 5, 9), doctest::Contains("c <= 2b"),
                         std::invalid_argument);
}

TEST_CASE("construct attaches display labels") {
    const Graph g = construct(2, 3, 3, 2);
    CHECK(*g.label(0) == "v_1");
    CHECK(*g.label(5) == "v_6");
    CHECK(*g.label(6) == "x");
    const Graph h = construct(1, 3, 4, 5);
    CHECK(*h.label(6) == "x_1");
    CHECK(*h.label(8) == "y_1");
}

TEST_CASE("witness matchings are the documented explicit families") {
    const auto [maximal2, maximum2] = witness_matchings(1, 2, 3, 2);
    CHECK(maximal2 == Matching{{0, 2}, {1, 3}});  // v_1v_3, v_2v_4
    CHECK(maximum2.size() == 3);  // the perfect matching E^(2)
    {
        std::vector<char> covered(6, 0);
        for (const auto& [u, v] : maximum2) covered[u] = covered[v] = 1;
        for (char c : covered) CHECK(c == 1);
    }

    const auto [maximal4, maximum4] = witness_matchings(2, 3, 3, 2);
    CHECK(maximal4.size() == 3);
    CHECK(maximum4.size() == 3);
    CHECK(maximal4 == maximum4);

    const auto [maximal6, maximum6] = witness_matchings(3, 4, 6, 5);
    CHECK(maximal6.size() == 4);
    CHECK(maximum6.size() == 6);

    CHECK_THROWS_AS(witness_matchings(1, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("witness sizes agree with the solvers across the grid") {
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 2 * b; ++c) {
                const int d = std::max(a, 2 * (c - b));
                const Graph g = construct(a, b, c, d);
                const auto [maximal, maximum] = witness_matchings(a, b, c, d);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CAPTURE(d);
                CHECK(static_cast<int>(maximal.size()) ==
                      min_matching_number(g));
                CHECK(static_cast<int>(maximum.size()) == matching_number(g));
            }
}

TEST_CASE("no graph's profile violates the feasibility condition") {
    // Converse of the realization sweep: computed profiles of arbitrary
    // graphs (with at least one edge, so all four values are positive) always
    // land inside the feasible region.
    for (int i = 0; i < 60; ++i) {
        const Graph g = random_graph(
            {2 + i % 8, i % 2 == 0 ? 0.35 : 0.75, 13000u + i, false});
        if (g.edge_count() == 0) continue;
        const InvariantProfile p = invariant_profile(g);
        CAPTURE(i);
        CHECK(feasible(p.ind_match, p.min_match, p.match, p.dim));
    }
}

TEST_CASE("vertex count formulas") {
    CHECK(build_case1(3, 4).order() == 2 * 3 + 4 - 1);
    CHECK(build_case2(3, 5).order() == 2 * 5);
    CHECK(build_case3(3, 5, 7).order() == 2 * 3 + 7);
    CHECK(build_case4(3, 4).order() == 2 * 4 + 1);
    CHECK(build_case5(3, 4, 6).order() == 2 * 4 + 6 - 3);
    CHECK(build_case6(2, 3, 4, 6).order() == 2 * 3 + 6);
    CHECK(build_case7(4, 4, 5, 6).order() == 2 * 4 + 2 * 1 + 6 - 4);
}
