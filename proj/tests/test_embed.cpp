#include "doctest.h"

#include <algorithm>

#include "sq17/embed.hpp"
#include "sq17/gen.hpp"

using namespace sq17;

namespace {

EmbeddedGraph triangle() {
    return EmbeddedGraph::build_from_rotations(3, {{1, 2}, {2, 0}, {0, 1}});
}

EmbeddedGraph path3() {
    return EmbeddedGraph::build_from_rotations(3, {{1}, {0, 2}, {1}});
}

int face_degree_sum(const EmbeddedGraph& g) {
    int s = 0;
    for (const Face& f : g.faces()) s += f.degree();
    return s;
}

}  // namespace

TEST_CASE("triangle has two faces of degree 3") {
    auto g = triangle();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    REQUIRE(g.face_count() == 2);
    CHECK(g.face(0).degree() == 3);
    CHECK(g.face(1).degree() == 3);
}

TEST_CASE("path has a single face of doubled degree") {
    auto g = path3();
    REQUIRE(g.face_count() == 1);
    CHECK(g.face(0).degree() == 4);
}

TEST_CASE("construction rejects malformed rotation systems") {
    CHECK_THROWS_AS(EmbeddedGraph::build_from_rotations(2, {{1}, {}}), AsymmetricAdjacency);
    CHECK_THROWS_AS(EmbeddedGraph::build_from_rotations(1, {{0}}), SelfLoop);
    CHECK_THROWS_AS(EmbeddedGraph::build_from_rotations(2, {{1, 1}, {0, 0}}), DuplicateNeighbor);
    CHECK_THROWS_AS(EmbeddedGraph::build_from_rotations(2, {{5}, {0}}), IdOutOfRange);
    CHECK_THROWS_AS(EmbeddedGraph::build_from_rotations(2, {{1}}), IdOutOfRange);
}

TEST_CASE("cycle faces and edits") {
    auto c5 = named_graph("cycle-5");
    REQUIRE(c5.face_count() == 2);
    CHECK(c5.face(0).degree() == 5);
    CHECK(c5.face(1).degree() == 5);

    SUBCASE("deleting a vertex leaves a path") {
        auto [p4, remap] = c5.delete_vertex(0);
        CHECK(p4.vertex_count() == 4);
        CHECK(p4.edge_count() == 3);
        CHECK(p4.face_count() == 1);
        CHECK(p4.face(0).degree() == 6);
        CHECK(remap[0] == -1);
        CHECK(remap[3] == 2);
    }
    SUBCASE("deleting an edge leaves a path with one face") {
        auto p5 = c5.delete_edge(0, 1);
        CHECK(p5.edge_count() == 4);
        REQUIRE(p5.face_count() == 1);
        CHECK(p5.face(0).degree() == 8);
    }
    SUBCASE("a chord splits a face into degree 3 and 4") {
        auto g = c5.add_chord(0, 2, 0);
        std::vector<int> degs;
        for (const Face& f : g.faces()) degs.push_back(f.degree());
        std::sort(degs.begin(), degs.end());
        CHECK(degs == std::vector<int>{3, 4, 5});
    }
}

TEST_CASE("icosahedron is a triangulation") {
    auto ico = named_graph("icosahedron");
    REQUIRE(ico.face_count() == 20);
    for (const Face& f : ico.faces()) CHECK(f.degree() == 3);
    auto r = euler_report(ico);
    CHECK(r.components == 1);
    CHECK(r.vertices == 12);
    CHECK(r.edges == 30);
    CHECK(r.faces == 20);
    CHECK(r.euler_ok);

    SUBCASE("vertex deletion merges the five faces around it") {
        auto neighbors = ico.rotation(0);
        auto [m, remap] = ico.delete_vertex(0);
        CHECK(m.vertex_count() == 11);
        std::vector<int> expected;
        for (int u : neighbors) expected.push_back(remap[u]);
        std::sort(expected.begin(), expected.end());
        bool found = false;
        for (const Face& f : m.faces())
            if (f.degree() == 5 && f.vertex_set() == expected) found = true;
        CHECK(found);
    }
    SUBCASE("edge deletion merges two triangles") {
        auto m = ico.delete_edge(0, ico.rotation(0)[0]);
        CHECK(m.face_count() == 19);
    }
}

TEST_CASE("chord on a path closes a cycle") {
    auto p4 = named_graph("path-4");
    auto c4 = p4.add_chord(0, 3, 0);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.face_count() == 2);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
}

TEST_CASE("chord inside a quadrilateral face makes two triangles") {
    auto c4 = named_graph("cycle-4");
    auto g = c4.add_chord(0, 2, 0);
    std::vector<int> degs;
    for (const Face& f : g.faces()) degs.push_back(f.degree());
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{3, 3, 4});
}

TEST_CASE("edit errors") {
    auto c5 = named_graph("cycle-5");
    CHECK_THROWS_AS(c5.delete_vertex(9), NoSuchVertex);
    CHECK_THROWS_AS(c5.delete_edge(0, 2), NoSuchEdge);
    CHECK_THROWS_AS(c5.add_chord(0, 1, 0), EdgeExists);
    CHECK_THROWS_AS(c5.add_chord(0, 0, 0), InvalidChord);
    CHECK_THROWS_AS(named_graph("cycle-4").add_chord(0, 2, 5), NotOnSameFace);
}

TEST_CASE("euler report flags disconnected graphs") {
    auto two = EmbeddedGraph::build_from_rotations(
        6, {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}});
    auto r = euler_report(two);
    CHECK(r.components == 2);
    CHECK_FALSE(r.euler_ok);
    CHECK(euler_report(triangle()).euler_ok);
    auto k1 = EmbeddedGraph::build_from_rotations(1, {{}});
    CHECK(euler_report(k1).euler_ok);
}

TEST_CASE("face degrees always sum to the dart count") {
    auto ico = named_graph("icosahedron");
    CHECK(face_degree_sum(ico) == 2 * ico.edge_count());
    auto m = ico.delete_edge(0, ico.rotation(0)[0]);
    CHECK(face_degree_sum(m) == 2 * m.edge_count());
    auto [m2, remap] = ico.delete_vertex(3);
    CHECK(face_degree_sum(m2) == 2 * m2.edge_count());
    auto c5 = named_graph("cycle-5").add_chord(0, 2, 0);
    CHECK(face_degree_sum(c5) == 2 * c5.edge_count());
}

TEST_CASE("epg round trip") {
    for (const auto& name : {"cycle-5", "icosahedron", "bowtie", "grid-3-3"}) {
        auto g = named_graph(name);
        auto h = parse_epg_string(to_epg(g));
        CHECK(h.rotations() == g.rotations());
        CHECK(to_epg(h) == to_epg(g));
    }
}

TEST_CASE("epg parse errors name the line") {
    CHECK_THROWS_AS(parse_epg_string("nope"), ParseError);
    try {
        parse_epg_string("epg 1\nn 2\nv 0: 1\nv 0: 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}
