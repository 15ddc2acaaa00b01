#include "sq17/square.hpp"

#include <algorithm>
#include <set>

namespace sq17 {

PlainGraph PlainGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    PlainGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw IdOutOfRange("edge endpoint out of range");
        if (u == v) throw SelfLoop("loop edge");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

PlainGraph PlainGraph::from_embedded(const EmbeddedGraph& g) {
    PlainGraph p;
    p.n = g.vertex_count();
    p.adj.assign(p.n, {});
    for (int v = 0; v < p.n; ++v) {
        p.adj[v] = g.rotation(v);
        std::sort(p.adj[v].begin(), p.adj[v].end());
    }
    return p;
}

bool PlainGraph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int PlainGraph::max_degree() const {
    int d = 0;
    for (const auto& a : adj) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

PlainGraph square_graph(const PlainGraph& g) {
    PlainGraph h;
    h.n = g.n;
    h.adj.assign(g.n, {});
    for (int v = 0; v < g.n; ++v) {
        std::set<int> nb(g.adj[v].begin(), g.adj[v].end());
        for (int u : g.adj[v])
            for (int w : g.adj[u])
                if (w != v) nb.insert(w);
        h.adj[v].assign(nb.begin(), nb.end());
    }
    return h;
}

PlainGraph square_graph(const EmbeddedGraph& g) {
    return square_graph(PlainGraph::from_embedded(g));
}

namespace {

// Greedy clique on descending-degree order; a chromatic lower bound.
int greedy_clique(const PlainGraph& h) {
    std::vector<int> order(h.n);
    for (int i = 0; i < h.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
        return a < b;
    });
    int best = 0;
    for (int seed : order) {
        std::vector<int> clique{seed};
        for (int v : order) {
            if (v == seed) continue;
            bool ok = true;
            for (int c : clique)
                if (!h.has_edge(v, c)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

struct ChiSearch {
    const PlainGraph& h;
    std::vector<int> color;  // 0 = uncolored, else 1..k
    int best;                // best complete coloring found so far
    int lower;

    explicit ChiSearch(const PlainGraph& g, int lb) : h(g), color(g.n, 0), best(g.n + 1), lower(lb) {}

    int pick_vertex() const {
        int pick = -1, psat = -1, pdeg = -1;
        for (int v = 0; v < h.n; ++v) {
            if (color[v]) continue;
            std::set<int> sat;
            for (int u : h.adj[v])
                if (color[u]) sat.insert(color[u]);
            const int s = static_cast<int>(sat.size());
            const int d = h.degree(v);
            if (s > psat || (s == psat && d > pdeg)) {
                pick = v;
                psat = s;
                pdeg = d;
            }
        }
        return pick;
    }

    void run(int colored, int used) {
        if (used >= best) return;
        if (colored == h.n) {
            best = used;
            return;
        }
        const int v = pick_vertex();
        std::vector<char> forbidden(h.n + 2, 0);
        for (int u : h.adj[v])
            if (color[u]) forbidden[color[u]] = true;
        for (int c = 1; c <= used && best > lower; ++c) {
            if (forbidden[c]) continue;
            color[v] = c;
            run(colored + 1, used);
            color[v] = 0;
        }
        // One fresh color; higher fresh colors are symmetric.
        if (used + 1 < best && best > lower) {
            color[v] = used + 1;
            run(colored + 1, used + 1);
            color[v] = 0;
        }
    }
};

}  // namespace

int chi_exact(const PlainGraph& h, int vertex_limit) {
    if (h.n > vertex_limit)
        throw TooLarge("graph has " + std::to_string(h.n) + " vertices, oracle limit " +
                       std::to_string(vertex_limit));
    if (h.n == 0) return 0;
    const int lb = greedy_clique(h);
    ChiSearch s(h, lb);
    s.run(0, 0);
    return s.best;
}

int chi2_exact(const EmbeddedGraph& g, int vertex_limit) {
    if (g.vertex_count() > vertex_limit)
        throw TooLarge("graph exceeds oracle limit");
    return chi_exact(square_graph(g), vertex_limit);
}

int chi2_exact(const PlainGraph& g, int vertex_limit) {
    if (g.n > vertex_limit) throw TooLarge("graph exceeds oracle limit");
    return chi_exact(square_graph(g), vertex_limit);
}

}  // namespace sq17
