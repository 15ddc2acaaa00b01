#include "sq17/color.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "sq17/metrics.hpp"

namespace sq17 {

namespace {

int smallest_free(const std::set<int>& used, int palette) {
    for (int c = 1; c <= palette; ++c)
        if (!used.count(c)) return c;
    throw NoColorAvailable("all " + std::to_string(palette) + " colors used in the neighborhood");
}

}  // namespace

int SquareColoring::colors_used() const {
    std::set<int> s(assignment.begin(), assignment.end());
    return static_cast<int>(s.size());
}

std::vector<Violation> verify_square_coloring(const EmbeddedGraph& g,
                                              const SquareColoring& coloring) {
    if (static_cast<int>(coloring.assignment.size()) != g.vertex_count())
        throw PartialColoring("coloring covers " + std::to_string(coloring.assignment.size()) +
                              " of " + std::to_string(g.vertex_count()) + " vertices");
    for (int c : coloring.assignment)
        if (c < 1) throw PartialColoring("uncolored vertex present");
    std::vector<Violation> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : n2_set(g, v)) {
            if (u <= v) continue;
            if (coloring.assignment[u] == coloring.assignment[v])
                out.push_back({v, u, g.has_edge(v, u) ? 1 : 2});
        }
    }
    return out;
}

SquareColoring extend_after_vertex_reduction(const EmbeddedGraph& g, int v,
                                             const SquareColoring& km,
                                             const std::vector<int>& remap) {
    SquareColoring tau;
    tau.palette_size = km.palette_size;
    tau.assignment.assign(g.vertex_count(), 0);
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) tau.assignment[u] = km.assignment[remap[u]];
    std::set<int> used;
    for (int u : n2_set(g, v)) used.insert(tau.assignment[u]);
    tau.assignment[v] = smallest_free(used, tau.palette_size);
    return tau;
}

SquareColoring extend_after_edge_reduction(const EmbeddedGraph& g, int u, int v,
                                           const SquareColoring& km) {
    SquareColoring tau = km;
    std::set<int> used_u;
    for (int w : n2_set(g, u))
        if (w != v) used_u.insert(tau.assignment[w]);
    const int a = smallest_free(used_u, tau.palette_size);
    tau.assignment[u] = a;
    std::set<int> used_v;
    for (int w : n2_set(g, v))
        if (w != u) used_v.insert(tau.assignment[w]);
    used_v.insert(a);
    tau.assignment[v] = smallest_free(used_v, tau.palette_size);
    return tau;
}

SquareColoring color_square_17(const EmbeddedGraph& g, int palette) {
    if (g.max_degree() > 5) throw DegreeTooHigh("max degree exceeds 5");
    if (!g.connected()) throw NotConnected("input graph is not connected");

    ReductionEngine engine(g, palette);
    std::vector<ReductionEngine::Step> frames;
    while (auto step = engine.step()) frames.push_back(std::move(*step));
    SquareColoring kappa;
    kappa.palette_size = palette;
    kappa.assignment.assign(engine.graph().vertex_count(), 1);
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
        if (it->witness.kind == ReductionWitness::Kind::VertexDeletion)
            kappa = extend_after_vertex_reduction(it->before, it->witness.v, kappa, it->remap);
        else
            kappa = extend_after_edge_reduction(it->before, it->witness.eu, it->witness.ev, kappa);
    }
    return kappa;
}

GreedyResult greedy_square_coloring(const EmbeddedGraph& g, const std::vector<int>& order) {
    GreedyResult r;
    r.assignment.assign(g.vertex_count(), 0);
    for (int v : order) {
        std::set<int> used;
        for (int u : n2_set(g, v))
            if (r.assignment[u] > 0) used.insert(r.assignment[u]);
        int c = 1;
        while (used.count(c)) ++c;
        r.assignment[v] = c;
        r.max_color = std::max(r.max_color, c);
    }
    return r;
}

std::string to_sqc(const SquareColoring& c) {
    std::ostringstream out;
    out << "sqc 1\n";
    for (size_t v = 0; v < c.assignment.size(); ++v)
        out << "c " << v << " " << c.assignment[v] << "\n";
    return out.str();
}

SquareColoring parse_sqc(std::istream& in, int expected_vertices) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line() || line != "sqc 1") throw fail("expected header 'sqc 1'");
    SquareColoring c;
    c.assignment.assign(expected_vertices, 0);
    for (int i = 0; i < expected_vertices; ++i) {
        if (!next_line()) throw fail("expected " + std::to_string(expected_vertices) + " color lines");
        std::istringstream ss(line);
        std::string kw;
        int id, col;
        if (!(ss >> kw >> id >> col) || kw != "c") throw fail("expected 'c <id> <color>'");
        if (id < 0 || id >= expected_vertices) throw fail("vertex id out of range");
        if (c.assignment[id] != 0) throw fail("duplicate color line for vertex " + std::to_string(id));
        if (col < 1) throw fail("colors are 1-based");
        c.assignment[id] = col;
    }
    return c;
}

SquareColoring parse_sqc_string(const std::string& text, int expected_vertices) {
    std::istringstream ss(text);
    return parse_sqc(ss, expected_vertices);
}

}  // namespace sq17
