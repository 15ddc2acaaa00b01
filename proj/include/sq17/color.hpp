#pragma once

#include <string>
#include <vector>

#include "sq17/embed.hpp"
#include "sq17/reduce.hpp"

namespace sq17 {

// Total vertex -> color map, colors 1..palette_size.
struct SquareColoring {
    std::vector<int> assignment;
    int palette_size = kPaletteSize;

    int colors_used() const;
};

struct Violation {
    int u = -1, v = -1;
    int distance = 0;
};

// Empty iff colors differ on every vertex pair at distance <= 2.
std::vector<Violation> verify_square_coloring(const EmbeddedGraph& g,
                                              const SquareColoring& coloring);

// Lifts a coloring of M = G - v (+ chords) back to G: surviving vertices keep
// their colors through the remap, v gets the smallest color free of N2_G(v).
SquareColoring extend_after_vertex_reduction(const EmbeddedGraph& g, int v,
                                             const SquareColoring& km,
                                             const std::vector<int>& remap);

// Lifts a coloring of M = G - uv back to G by recoloring u then v with the
// smallest admissible colors.
SquareColoring extend_after_edge_reduction(const EmbeddedGraph& g, int u, int v,
                                           const SquareColoring& km);

// The constructive recursion: reduce to a single vertex, then unwind the
// extension steps. Requires a connected plane graph with max degree <= 5.
SquareColoring color_square_17(const EmbeddedGraph& g, int palette = kPaletteSize);

struct GreedyResult {
    std::vector<int> assignment;
    int max_color = 0;
};

// Smallest-available greedy against already-colored distance-<=2 neighbors,
// unbounded palette. Baseline and sanity harness.
GreedyResult greedy_square_coloring(const EmbeddedGraph& g, const std::vector<int>& order);

// sqc text format.
std::string to_sqc(const SquareColoring& c);
SquareColoring parse_sqc(std::istream& in, int expected_vertices);
SquareColoring parse_sqc_string(const std::string& text, int expected_vertices);

}  // namespace sq17
