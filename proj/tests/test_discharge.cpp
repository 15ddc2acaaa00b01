#include "doctest.h"

#include "sq17/discharge.hpp"
#include "sq17/gen.hpp"

using namespace sq17;

TEST_CASE("initial charges are degree minus four") {
    auto k4 = named_graph("k4");
    auto mu = initial_charges(k4);
    for (long long c : mu.vertex_fifteenths) CHECK(c == -15);  // 3-vertices
    for (long long c : mu.face_fifteenths) CHECK(c == -15);    // 3-faces
    CHECK(mu.total_fifteenths() == -120);

    auto c5 = named_graph("cycle-5");
    auto mu5 = initial_charges(c5);
    for (long long c : mu5.vertex_fifteenths) CHECK(c == -30);
    for (long long c : mu5.face_fifteenths) CHECK(c == 15);
    CHECK(mu5.total_fifteenths() == -120);
}

TEST_CASE("cycle discharges through the big faces only") {
    auto c5 = named_graph("cycle-5");
    auto out = discharged_charges(c5);
    // Each vertex gains 1/5 from both incident 5-faces: -2 + 2/5 = -8/5.
    for (long long c : out.vertex_fifteenths) CHECK(c == -24);
    for (long long c : out.face_fifteenths) CHECK(c == 0);
    CHECK(out.total_fifteenths() == -120);
}

TEST_CASE("icosahedron discharges through the triangles only") {
    auto ico = named_graph("icosahedron");
    auto out = discharged_charges(ico);
    // Each 5-vertex pays 1/3 to five triangles: 1 - 5/3 = -2/3.
    for (long long c : out.vertex_fifteenths) CHECK(c == -10);
    for (long long c : out.face_fifteenths) CHECK(c == 0);
    CHECK(out.total_fifteenths() == -120);
}

TEST_CASE("no rule fires on a single edge") {
    auto k2 = EmbeddedGraph::build_from_rotations(2, {{1}, {0}});
    auto mu = initial_charges(k2);
    auto out = discharged_charges(k2);
    CHECK(out.vertex_fifteenths == mu.vertex_fifteenths);
    CHECK(out.face_fifteenths == mu.face_fifteenths);
}

TEST_CASE("charge is conserved on generated graphs") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5, 6}) {
        auto g = gen_random_delta5({40, seed});
        auto mu = initial_charges(g);
        auto out = discharged_charges(g);
        CHECK(mu.total_fifteenths() == out.total_fifteenths());
        CHECK(out.total_fifteenths() == -120);
    }
}

TEST_CASE("audit flags negatives and forbidden structure together") {
    auto r = audit(named_graph("cycle-5"));
    CHECK(r.conserved);
    CHECK(r.total_fifteenths == -120);
    CHECK(r.negative_elements ==
          std::vector<std::string>{"v 0", "v 1", "v 2", "v 3", "v 4"});
    CHECK(r.forbidden.mentions("vertex of degree 2"));
    CHECK_FALSE(r.proof_anomaly);

    auto rico = audit(named_graph("icosahedron"));
    CHECK(rico.negative_elements.size() == 12);
    CHECK(rico.forbidden.mentions("5-vertex on five 3-faces"));
    CHECK_FALSE(rico.proof_anomaly);

    auto two = EmbeddedGraph::build_from_rotations(
        6, {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}});
    CHECK_THROWS_AS(audit(two), NotConnected);
}

TEST_CASE("audit text ends with the total") {
    auto text = to_text(audit(named_graph("cycle-5")));
    CHECK(text.find("mu' v 0 -24/15") != std::string::npos);
    CHECK(text.find("total -120/15") != std::string::npos);
}
