#include "doctest.h"

#include <set>

#include "sq17/color.hpp"
#include "sq17/gen.hpp"
#include "sq17/metrics.hpp"

using namespace sq17;

TEST_CASE("verifier counts distance-2 clashes") {
    auto c5 = named_graph("cycle-5");
    SquareColoring ok{{1, 2, 3, 4, 5}, 17};
    CHECK(verify_square_coloring(c5, ok).empty());

    SquareColoring mono{{1, 1, 1, 1, 1}, 17};
    CHECK(verify_square_coloring(c5, mono).size() == 10);

    auto p3 = named_graph("path-3");
    SquareColoring clash{{1, 2, 1}, 17};
    auto v = verify_square_coloring(p3, clash);
    REQUIRE(v.size() == 1);
    CHECK(v[0].distance == 2);

    SquareColoring partial{{1, 2}, 17};
    CHECK_THROWS_AS(verify_square_coloring(p3, partial), PartialColoring);
    SquareColoring uncolored{{1, 0, 2}, 17};
    CHECK_THROWS_AS(verify_square_coloring(p3, uncolored), PartialColoring);
}

TEST_CASE("vertex extension picks the smallest free color") {
    auto c5 = named_graph("cycle-5");
    auto w = find_vertex_reduction(c5);
    REQUIRE(w);
    auto [c4, remap] = apply_reduction(c5, *w);
    SquareColoring km{{1, 2, 3, 4}, 17};
    auto tau = extend_after_vertex_reduction(c5, w->v, km, remap);
    CHECK(tau.assignment[w->v] == 5);
    CHECK(verify_square_coloring(c5, tau).empty());

    // Exhausted neighborhood under a tight palette.
    SquareColoring tight{{1, 2, 3, 4}, 4};
    CHECK_THROWS_AS(extend_after_vertex_reduction(c5, w->v, tight, remap), NoColorAvailable);
}

TEST_CASE("edge extension recolors only the endpoints") {
    auto c5 = named_graph("cycle-5");
    auto w = find_edge_reduction(c5);
    REQUIRE(w);
    auto m = c5.delete_edge(w->eu, w->ev);
    auto km = color_square_17(m);
    auto tau = extend_after_edge_reduction(c5, w->eu, w->ev, km);
    CHECK(verify_square_coloring(c5, tau).empty());
    for (int v = 0; v < 5; ++v)
        if (v != w->eu && v != w->ev) CHECK(tau.assignment[v] == km.assignment[v]);
}

TEST_CASE("constructive coloring on fixed instances") {
    auto p3 = named_graph("path-3");
    auto cp3 = color_square_17(p3);
    CHECK(verify_square_coloring(p3, cp3).empty());
    CHECK(cp3.colors_used() == 3);

    auto c5 = named_graph("cycle-5");
    auto cc5 = color_square_17(c5);
    CHECK(verify_square_coloring(c5, cc5).empty());
    CHECK(cc5.colors_used() == 5);

    auto ico = named_graph("icosahedron");
    auto cico = color_square_17(ico);
    CHECK(verify_square_coloring(ico, cico).empty());
    CHECK(cico.colors_used() <= 17);
}

TEST_CASE("constructive coloring respects the degree lower bound") {
    for (const auto& name : named_instances()) {
        auto g = named_graph(name);
        auto c = color_square_17(g);
        CHECK(verify_square_coloring(g, c).empty());
        CHECK(c.colors_used() <= 17);
        if (g.max_degree() >= 1) CHECK(c.colors_used() >= g.max_degree() + 1);
    }
}

TEST_CASE("coloring preconditions") {
    auto star6 = EmbeddedGraph::build_from_rotations(
        7, {{1, 2, 3, 4, 5, 6}, {0}, {0}, {0}, {0}, {0}, {0}});
    CHECK_THROWS_AS(color_square_17(star6), DegreeTooHigh);
    auto two = EmbeddedGraph::build_from_rotations(
        6, {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}});
    CHECK_THROWS_AS(color_square_17(two), NotConnected);
}

TEST_CASE("greedy baseline") {
    auto p3 = named_graph("path-3");
    auto r = greedy_square_coloring(p3, {0, 1, 2});
    CHECK(r.assignment == std::vector<int>{1, 2, 3});
    CHECK(r.max_color == 3);

    auto c5 = named_graph("cycle-5");
    CHECK(greedy_square_coloring(c5, {3, 0, 2, 4, 1}).max_color == 5);

    auto ico = named_graph("icosahedron");
    std::vector<int> order;
    for (int v = 0; v < 12; ++v) order.push_back(v);
    auto ri = greedy_square_coloring(ico, order);
    CHECK(ri.max_color >= 6);
    CHECK(ri.max_color <= 11);
}

TEST_CASE("sqc round trip") {
    auto c5 = named_graph("cycle-5");
    auto c = color_square_17(c5);
    auto parsed = parse_sqc_string(to_sqc(c), 5);
    CHECK(parsed.assignment == c.assignment);

    CHECK_THROWS_AS(parse_sqc_string("bogus", 5), ParseError);
    CHECK_THROWS_AS(parse_sqc_string("sqc 1\nc 0 1\nc 0 2\n", 2), ParseError);
    CHECK_THROWS_AS(parse_sqc_string("sqc 1\nc 0 0\nc 1 1\n", 2), ParseError);
}
