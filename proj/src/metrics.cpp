#include "sq17/metrics.hpp"

#include <algorithm>
#include <set>

namespace sq17 {

int VertexProfile::f3() const {
    auto it = f_counts.find(3);
    return it == f_counts.end() ? 0 : it->second;
}

int VertexProfile::f4() const {
    auto it = f_counts.find(4);
    return it == f_counts.end() ? 0 : it->second;
}

int VertexProfile::f5plus() const {
    int c = 0;
    for (const auto& [deg, cnt] : f_counts)
        if (deg >= 5) c += cnt;
    return c;
}

std::vector<int> n2_set(const EmbeddedGraph& g, int v) {
    if (!g.has_vertex(v)) throw NoSuchVertex("no vertex " + std::to_string(v));
    std::set<int> out;
    for (int u : g.rotation(v)) {
        out.insert(u);
        for (int w : g.rotation(u))
            if (w != v) out.insert(w);
    }
    return {out.begin(), out.end()};
}

int f_count(const EmbeddedGraph& g, int v, int face_degree) {
    int c = 0;
    for (int s = 0; s < g.degree(v); ++s)
        if (g.face(g.face_of_slot(v, s)).degree() == face_degree) ++c;
    return c;
}

int f5plus_count(const EmbeddedGraph& g, int v) {
    int c = 0;
    for (int s = 0; s < g.degree(v); ++s)
        if (g.face(g.face_of_slot(v, s)).degree() >= 5) ++c;
    return c;
}

int n2_upper_bound(const EmbeddedGraph& g, int v) {
    if (!g.has_vertex(v)) throw NoSuchVertex("no vertex " + std::to_string(v));
    // Distinct faces incident to v.
    std::vector<int> fids;
    for (int s = 0; s < g.degree(v); ++s) fids.push_back(g.face_of_slot(v, s));
    std::sort(fids.begin(), fids.end());
    fids.erase(std::unique(fids.begin(), fids.end()), fids.end());
    // Every incident 3- or 4-face must bound a simple cycle: a walk revisiting
    // a vertex (tree faces, cut vertices) is not the cycle the formula assumes.
    for (int fid : fids) {
        const Face& f = g.face(fid);
        if (f.degree() <= 4 && static_cast<int>(f.vertex_set().size()) < f.degree())
            throw DegenerateFaces("incident face of vertex " + std::to_string(v) +
                                  " revisits a boundary vertex");
    }
    // And it must have a boundary vertex set distinct from every other incident
    // face's, else the formula double-subtracts.
    for (size_t i = 0; i < fids.size(); ++i) {
        for (size_t j = i + 1; j < fids.size(); ++j) {
            const int di = g.face(fids[i]).degree();
            const int dj = g.face(fids[j]).degree();
            if (di > 4 && dj > 4) continue;
            if (g.face(fids[i]).vertex_set() == g.face(fids[j]).vertex_set())
                throw DegenerateFaces("incident faces of vertex " + std::to_string(v) +
                                      " share a boundary vertex set");
        }
    }
    int bound = 0;
    for (int u : g.rotation(v)) bound += g.degree(u);
    bound -= 2 * f_count(g, v, 3);
    bound -= f_count(g, v, 4);
    return bound;
}

bool is_bad_five_vertex(const EmbeddedGraph& g, int v) {
    return g.degree(v) == 5 && f_count(g, v, 3) == 4;
}

std::vector<int> corners_of(const EmbeddedGraph& g, int v) {
    if (!is_bad_five_vertex(g, v)) return {};
    std::vector<int> out;
    for (int u : g.rotation(v)) {
        if (g.degree(u) != 5) continue;
        const int da = g.face(g.face_of_dart(u, v)).degree();
        const int db = g.face(g.face_of_dart(v, u)).degree();
        const bool on3 = da == 3 || db == 3;
        const bool on5p = da >= 5 || db >= 5;
        if (on3 && on5p) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int t5(const EmbeddedGraph& g, int u) {
    if (g.degree(u) != 5 || f_count(g, u, 3) > 3) return 0;
    int c = 0;
    for (int v : g.rotation(u)) {
        if (!is_bad_five_vertex(g, v)) continue;
        const auto cs = corners_of(g, v);
        if (std::find(cs.begin(), cs.end(), u) != cs.end()) ++c;
    }
    return c;
}

VertexProfile vertex_profile(const EmbeddedGraph& g, int v) {
    if (!g.has_vertex(v)) throw NoSuchVertex("no vertex " + std::to_string(v));
    VertexProfile p;
    p.vertex = v;
    p.degree = g.degree(v);
    p.n2_size = static_cast<int>(n2_set(g, v).size());
    for (int s = 0; s < g.degree(v); ++s)
        ++p.f_counts[g.face(g.face_of_slot(v, s)).degree()];
    for (int u : g.rotation(v)) ++p.n_counts[g.degree(u)];
    p.is_bad5 = is_bad_five_vertex(g, v);
    p.corners = corners_of(g, v);
    p.t5 = t5(g, v);
    return p;
}

}  // namespace sq17
