#include "doctest.h"

#include <algorithm>

#include "sq17/gen.hpp"
#include "sq17/metrics.hpp"

using namespace sq17;

TEST_CASE("distance-2 neighborhoods") {
    auto c5 = named_graph("cycle-5");
    CHECK(n2_set(c5, 0) == std::vector<int>{1, 2, 3, 4});
    auto p5 = named_graph("path-5");
    CHECK(n2_set(p5, 0) == std::vector<int>{1, 2});
    auto ico = named_graph("icosahedron");
    for (int v = 0; v < 12; ++v) CHECK(n2_set(ico, v).size() == 10);
}

TEST_CASE("neighborhood upper bound") {
    auto c5 = named_graph("cycle-5");
    CHECK(n2_upper_bound(c5, 0) == 4);
    CHECK(static_cast<int>(n2_set(c5, 0).size()) == 4);

    auto bowtie = named_graph("bowtie");
    int center = -1;
    for (int v = 0; v < bowtie.vertex_count(); ++v)
        if (bowtie.degree(v) == 4) center = v;
    REQUIRE(center >= 0);
    CHECK(n2_upper_bound(bowtie, center) == 4);
    CHECK(n2_set(bowtie, center).size() == 4);

    auto k3 = named_graph("cycle-3");
    CHECK_THROWS_AS(n2_upper_bound(k3, 0), DegenerateFaces);
    CHECK_THROWS_AS(n2_upper_bound(named_graph("cycle-4"), 0), DegenerateFaces);
}

TEST_CASE("upper bound holds across generated graphs") {
    for (std::uint64_t seed : {3, 4, 5, 11, 12}) {
        auto g = gen_random_delta5({30, seed});
        for (int v = 0; v < g.vertex_count(); ++v) {
            int bound;
            try {
                bound = n2_upper_bound(g, v);
            } catch (const DegenerateFaces&) {
                continue;
            }
            const int actual = static_cast<int>(n2_set(g, v).size());
            CHECK(actual <= bound);
            int crude = g.degree(v);
            for (int u : g.rotation(v)) crude += g.degree(u) - 1;
            CHECK(actual <= crude);
        }
    }
}

TEST_CASE("icosahedron profiles") {
    auto ico = named_graph("icosahedron");
    for (int v = 0; v < 12; ++v) {
        auto p = vertex_profile(ico, v);
        CHECK(p.degree == 5);
        CHECK(p.f3() == 5);
        CHECK(p.f5plus() == 0);
        CHECK_FALSE(p.is_bad5);
        CHECK(p.corners.empty());
        CHECK(p.t5 == 0);
        CHECK(p.n2_size == 10);
        CHECK(t5(ico, v) == 0);  // f3 = 5, outside the t5 convention
    }
}

TEST_CASE("cycle profiles") {
    auto c5 = named_graph("cycle-5");
    for (int v = 0; v < 5; ++v) {
        auto p = vertex_profile(c5, v);
        CHECK(p.degree == 2);
        CHECK(p.f5plus() == 2);
        CHECK(p.n2_size == 4);
    }
}

TEST_CASE("bad 5-vertex detection") {
    // Hub on four triangles plus one larger face.
    auto g = EmbeddedGraph::build_from_rotations(
        6, {{1, 2, 3, 4, 5}, {2, 0}, {3, 0, 1}, {4, 0, 2}, {5, 0, 3}, {0, 4}});
    CHECK(f_count(g, 0, 3) == 4);
    CHECK(f5plus_count(g, 0) == 1);
    CHECK(is_bad_five_vertex(g, 0));
    // No 5-valent neighbors, so no corners.
    CHECK(corners_of(g, 0).empty());
    CHECK_FALSE(is_bad_five_vertex(g, 2));
    CHECK(vertex_profile(g, 0).is_bad5);
}

TEST_CASE("corner bookkeeping is consistent on generated graphs") {
    for (std::uint64_t seed : {1, 2, 6, 7, 18}) {
        auto g = gen_random_delta5({60, seed});
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto corners = corners_of(g, v);
            if (!is_bad_five_vertex(g, v)) {
                CHECK(corners.empty());
                continue;
            }
            CHECK(corners.size() <= 2);
            for (int u : corners) {
                CHECK(g.degree(u) == 5);
                CHECK(g.has_edge(u, v));
            }
        }
        // t5(u) counts exactly the bad-5 neighbors claiming u as a corner.
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (g.degree(u) != 5 || f_count(g, u, 3) > 3) {
                CHECK(t5(g, u) == 0);
                continue;
            }
            int expected = 0;
            for (int v : g.rotation(u)) {
                auto c = corners_of(g, v);
                if (std::find(c.begin(), c.end(), u) != c.end()) ++expected;
            }
            CHECK(t5(g, u) == expected);
        }
    }
}

TEST_CASE("profile errors") {
    CHECK_THROWS_AS(vertex_profile(named_graph("cycle-5"), 9), NoSuchVertex);
}
