#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sq17/embed.hpp"

namespace sq17 {

struct GenSpec {
    int n = 0;
    std::uint64_t seed = 0;
};

// Canonical rotation systems for path-k, cycle-k, grid-a-b, icosahedron,
// dodecahedron, prism-k, bowtie, k4.
EmbeddedGraph named_graph(const std::string& name);

// The fixed named instances used by tests and the acceptance suite.
std::vector<std::string> named_instances();

// Seeded random connected plane graph with max degree <= 5: grow a random
// triangulation by inserting vertices into random faces, then delete edges at
// max-degree vertices (avoiding bridges) until the degree cap holds.
EmbeddedGraph gen_random_delta5(const GenSpec& spec);

// Acceptance corpus: seeds 1..1000 with n cycling through {5,10,25,50,100,300}.
std::vector<GenSpec> corpus_specs();

}  // namespace sq17
