#pragma once

#include <vector>

#include "sq17/embed.hpp"

namespace sq17 {

// Embedding-free simple graph, used for graph powers and the exact oracle.
struct PlainGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    static PlainGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static PlainGraph from_embedded(const EmbeddedGraph& g);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
};

// Distance-<=2 closure: edge uv iff d_G(u,v) in {1,2}.
PlainGraph square_graph(const PlainGraph& g);
PlainGraph square_graph(const EmbeddedGraph& g);

inline constexpr int kDefaultOracleLimit = 20;

// Exact chromatic number by branch and bound: greedy clique lower bound,
// saturation-ordered backtracking, new colors tried only once per node.
int chi_exact(const PlainGraph& h, int vertex_limit = kDefaultOracleLimit);

// chi_exact of the square.
int chi2_exact(const EmbeddedGraph& g, int vertex_limit = kDefaultOracleLimit);
int chi2_exact(const PlainGraph& g, int vertex_limit = kDefaultOracleLimit);

}  // namespace sq17
