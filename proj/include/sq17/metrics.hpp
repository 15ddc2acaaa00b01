#pragma once

#include <map>
#include <vector>

#include "sq17/embed.hpp"

namespace sq17 {

// Per-vertex incidence statistics. Face counts are per incidence slot: each of
// the d(v) outgoing darts of v lies on exactly one face.
struct VertexProfile {
    int vertex = -1;
    int degree = 0;
    int n2_size = 0;
    std::map<int, int> f_counts;  // face degree -> incident slots
    std::map<int, int> n_counts;  // neighbor degree -> count
    bool is_bad5 = false;
    std::vector<int> corners;
    int t5 = 0;

    int f3() const;
    int f4() const;
    int f5plus() const;
};

// Vertices at distance 1 or 2 from v, excluding v. Sorted ascending.
std::vector<int> n2_set(const EmbeddedGraph& g, int v);

// Sum of neighbor degrees minus 2*f3(v) minus f4(v). Throws DegenerateFaces
// when two incident faces (one of them a 3- or 4-face) share a boundary
// vertex set, where the formula undercounts.
int n2_upper_bound(const EmbeddedGraph& g, int v);

int f_count(const EmbeddedGraph& g, int v, int face_degree);
int f5plus_count(const EmbeddedGraph& g, int v);

bool is_bad_five_vertex(const EmbeddedGraph& g, int v);

// Corners of a bad 5-vertex v: 5-valent neighbors u with edge uv on both a
// 3-face and a 5+-face. Empty when v is not a bad 5-vertex.
std::vector<int> corners_of(const EmbeddedGraph& g, int v);

// Number of bad-5-vertex neighbors of u for which u is a corner. Defined for
// 5-vertices with f3(u) <= 3; returns 0 everywhere else.
int t5(const EmbeddedGraph& g, int u);

VertexProfile vertex_profile(const EmbeddedGraph& g, int v);

}  // namespace sq17
