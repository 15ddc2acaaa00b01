#include "doctest.h"

#include "sq17/gen.hpp"

using namespace sq17;

TEST_CASE("named instances are well formed") {
    for (const auto& name : named_instances()) {
        auto g = named_graph(name);
        auto r = euler_report(g);
        CHECK(r.components == 1);
        CHECK(r.euler_ok);
    }
    CHECK_THROWS_AS(named_graph("moebius-kantor"), UnknownName);
}

TEST_CASE("named instance shapes") {
    auto ico = named_graph("icosahedron");
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
    for (const Face& f : ico.faces()) CHECK(f.degree() == 3);

    auto dod = named_graph("dodecahedron");
    CHECK(dod.vertex_count() == 20);
    CHECK(dod.edge_count() == 30);
    for (const Face& f : dod.faces()) CHECK(f.degree() == 5);

    auto grid = named_graph("grid-3-3");
    CHECK(grid.vertex_count() == 9);
    CHECK(grid.max_degree() == 4);

    auto c5 = named_graph("cycle-5");
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);

    auto prism = named_graph("prism-5");
    CHECK(prism.vertex_count() == 10);
    CHECK(prism.edge_count() == 15);
}

TEST_CASE("smallest random graph is the triangle") {
    for (std::uint64_t seed : {1, 2, 99}) {
        auto g = gen_random_delta5({3, seed});
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
    }
    CHECK_THROWS_AS(gen_random_delta5({2, 1}), Unsatisfiable);
}

TEST_CASE("generation is deterministic") {
    auto a = gen_random_delta5({50, 1});
    auto b = gen_random_delta5({50, 1});
    CHECK(to_epg(a) == to_epg(b));
    auto c = gen_random_delta5({50, 2});
    CHECK(to_epg(a) != to_epg(c));
}

TEST_CASE("generated graphs satisfy the contract") {
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
        auto g = gen_random_delta5(corpus_specs()[seed - 1]);
        auto r = euler_report(g);
        CHECK(r.components == 1);
        CHECK(r.euler_ok);
        CHECK(g.max_degree() <= 5);
    }
}

TEST_CASE("corpus covers the fixed seeds and sizes") {
    auto specs = corpus_specs();
    REQUIRE(specs.size() == 1000);
    CHECK(specs[0].n == 5);
    CHECK(specs[1].n == 10);
    CHECK(specs[5].n == 300);
    CHECK(specs[6].n == 5);
    CHECK(specs[0].seed == 1);
    CHECK(specs[999].seed == 1000);
}
