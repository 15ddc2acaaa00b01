#include "sq17/reduce.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "sq17/discharge.hpp"
#include "sq17/metrics.hpp"

namespace sq17 {

namespace {

// M plus the surviving images of v's former neighbors.
struct FamilyGraph {
    EmbeddedGraph m;
    std::vector<int> remap;
    std::vector<int> neighbor_images;
};

void validate_chords(const EmbeddedGraph& g, int v,
                     const std::vector<std::pair<int, int>>& chords) {
    std::vector<std::pair<int, int>> seen;
    for (auto [a, b] : chords) {
        if (a == b) throw InvalidChord("chord endpoints coincide");
        if (!g.has_edge(v, a) || !g.has_edge(v, b))
            throw InvalidChord("chord endpoint is not a neighbor of vertex " + std::to_string(v));
        if (g.has_edge(a, b))
            throw InvalidChord("chord " + std::to_string(a) + "-" + std::to_string(b) +
                               " duplicates an existing edge");
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw InvalidChord("chord listed twice");
        seen.push_back(key);
    }
}

// Inserts the chords into a prebuilt M0 = G - v; empty when some chord cannot
// be embedded. M0 is only copied for the chordless case.
std::optional<FamilyGraph> apply_chords(const EmbeddedGraph& g, int v, const EmbeddedGraph& m0,
                                        const std::vector<int>& remap,
                                        const std::vector<std::pair<int, int>>& chords) {
    const EmbeddedGraph* cur = &m0;
    std::optional<EmbeddedGraph> built;
    for (auto [a, b] : chords) {
        try {
            built = cur->add_edge_planar(remap[a], remap[b]);
        } catch (const NotOnSameFace&) {
            return std::nullopt;
        } catch (const EdgeExists&) {
            return std::nullopt;
        }
        cur = &*built;
    }
    FamilyGraph fg{built ? std::move(*built) : m0, remap, {}};
    for (int u : g.rotation(v)) fg.neighbor_images.push_back(fg.remap[u]);
    return fg;
}

// Builds M = G - v + chords; empty when some chord cannot be embedded.
std::optional<FamilyGraph> build_family_graph(const EmbeddedGraph& g, int v,
                                              const std::vector<std::pair<int, int>>& chords) {
    validate_chords(g, v, chords);
    auto [m, remap] = g.delete_vertex(v);
    return apply_chords(g, v, m, remap, chords);
}

bool within_distance_two(const EmbeddedGraph& g, int src, int dst) {
    if (src == dst) return true;
    for (int u : g.rotation(src)) {
        if (u == dst) return true;
        for (int w : g.rotation(u))
            if (w == dst) return true;
    }
    return false;
}

bool family_conditions(const EmbeddedGraph& g, const FamilyGraph& fg) {
    for (size_t i = 0; i < fg.neighbor_images.size(); ++i)
        for (size_t j = i + 1; j < fg.neighbor_images.size(); ++j)
            if (!within_distance_two(fg.m, fg.neighbor_images[i], fg.neighbor_images[j]))
                return false;
    if (fg.m.max_degree() > 5) return false;
    return fg.m.vertex_count() + fg.m.edge_count() < g.vertex_count() + g.edge_count();
}

// Known-good chord-set templates tried before the generic enumeration. Each entry is
// (chords, tag); chords reference vertex ids of g.
std::vector<std::pair<std::vector<std::pair<int, int>>, std::string>> template_candidates(
    const EmbeddedGraph& g, int v) {
    std::vector<std::pair<std::vector<std::pair<int, int>>, std::string>> out;
    const auto& nb = g.rotation(v);
    const int d = g.degree(v);
    if (d == 0) {
        out.push_back({{}, "isolated"});
        return out;
    }
    if (d == 1) {
        out.push_back({{}, "pendant"});
        return out;
    }
    if (d == 2) {
        if (g.has_edge(nb[0], nb[1]))
            out.push_back({{}, "degree-2"});
        else
            out.push_back({{{std::min(nb[0], nb[1]), std::max(nb[0], nb[1])}}, "degree-2"});
        return out;
    }
    if (d == 3) {
        // Star the two missing chords through one hub neighbor.
        std::vector<int> s(nb.begin(), nb.end());
        std::sort(s.begin(), s.end());
        for (int hub : s) {
            std::vector<std::pair<int, int>> chords;
            bool ok = true;
            for (int other : s) {
                if (other == hub || g.has_edge(hub, other)) continue;
                if (g.degree(hub) - 1 + static_cast<int>(chords.size()) + 1 > 5) {
                    ok = false;
                    break;
                }
                chords.push_back({std::min(hub, other), std::max(hub, other)});
            }
            if (ok) out.push_back({std::move(chords), "three-vertex"});
        }
        return out;
    }
    if (d == 5 && f_count(g, v, 3) == 5) {
        out.push_back({{}, "five-triangles"});
        return out;
    }
    if (d == 5 && f_count(g, v, 3) == 4) {
        // Bad 5-vertex: close the gap across the 5+-face.
        for (int s = 0; s < d; ++s) {
            if (g.face(g.face_of_slot(v, s)).degree() == 3) continue;
            const int a = nb[s];
            const int b = nb[(s + 1) % d];
            if (!g.has_edge(a, b))
                out.push_back({{{std::min(a, b), std::max(a, b)}}, "four-triangles"});
        }
        return out;
    }
    return out;
}

// Adjacency-only preview of the family conditions, in g's vertex ids. Exact
// for (ii) and (iii); exact for (i) too, since dist_M <= 2 means adjacency or
// a common neighbor, both computable without embedding. Planarity of the
// chord set is the only thing it cannot decide.
bool family_conditions_abstract(const EmbeddedGraph& g, int v,
                                const std::vector<std::pair<int, int>>& chords) {
    const auto& nb = g.rotation(v);
    if (static_cast<int>(chords.size()) > g.degree(v)) return false;  // (iii)
    auto chord_partners = [&](int x) {
        std::vector<int> out;
        for (auto [a, b] : chords) {
            if (a == x) out.push_back(b);
            if (b == x) out.push_back(a);
        }
        return out;
    };
    for (int x : nb)  // (ii): only former neighbors change degree
        if (g.degree(x) - 1 + static_cast<int>(chord_partners(x).size()) > 5) return false;
    // (i): pairwise distance <= 2 in M.
    std::vector<std::vector<int>> nbrs_m(nb.size());
    for (size_t i = 0; i < nb.size(); ++i) {
        for (int w : g.rotation(nb[i]))
            if (w != v) nbrs_m[i].push_back(w);
        for (int w : chord_partners(nb[i])) nbrs_m[i].push_back(w);
        std::sort(nbrs_m[i].begin(), nbrs_m[i].end());
    }
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) {
            if (std::binary_search(nbrs_m[i].begin(), nbrs_m[i].end(), nb[j])) continue;
            bool common = false;
            for (int w : nbrs_m[i])
                if (std::binary_search(nbrs_m[j].begin(), nbrs_m[j].end(), w)) {
                    common = true;
                    break;
                }
            if (!common) return false;
        }
    return true;
}

// Chord sets live inside the face opened up by deleting v, so two chords can
// only coexist when their endpoints do not interleave in the cyclic order
// around v. Rejecting crossing pairs early skips embeds doomed to fail.
bool chords_non_crossing(const EmbeddedGraph& g, int v,
                         const std::vector<std::pair<int, int>>& chords) {
    if (chords.size() < 2) return true;
    const auto& nb = g.rotation(v);
    auto pos = [&](int x) {
        return static_cast<int>(std::find(nb.begin(), nb.end(), x) - nb.begin());
    };
    auto between = [](int lo, int hi, int x) {  // open cyclic interval (lo, hi)
        return lo < hi ? lo < x && x < hi : x > lo || x < hi;
    };
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            if (a == c || a == d || b == c || b == d) continue;
            const int pa = pos(a), pb = pos(b);
            if (between(pa, pb, pos(c)) != between(pa, pb, pos(d))) return false;
        }
    return true;
}

std::optional<ReductionWitness> try_vertex(const EmbeddedGraph& g, int v, int palette) {
    const int n2 = static_cast<int>(n2_set(g, v).size());
    if (n2 > palette - 1) return std::nullopt;
    auto make_witness = [&](std::vector<std::pair<int, int>> chords, std::string tag) {
        ReductionWitness w;
        w.kind = ReductionWitness::Kind::VertexDeletion;
        w.v = v;
        w.chords = std::move(chords);
        w.lemma_tag = std::move(tag);
        w.n2_before = {n2};
        return w;
    };
    // The deletion base is shared across all chord candidates for this vertex.
    std::optional<std::pair<EmbeddedGraph, std::vector<int>>> base;
    auto accept = [&](const std::vector<std::pair<int, int>>& chords) {
        if (!chords_non_crossing(g, v, chords)) return false;
        if (!family_conditions_abstract(g, v, chords)) return false;
        if (!base) base = g.delete_vertex(v);
        auto fg = apply_chords(g, v, base->first, base->second, chords);
        return fg && family_conditions(g, *fg);
    };
    for (auto& [chords, tag] : template_candidates(g, v))
        if (accept(chords)) return make_witness(chords, tag);
    // Generic enumeration: candidate chords are non-adjacent neighbor pairs,
    // subsets ascending by size then lexicographic, first valid wins. Subsets
    // larger than d(v) would break the measure condition and are skipped.
    std::vector<int> nb(g.rotation(v).begin(), g.rotation(v).end());
    std::sort(nb.begin(), nb.end());
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j]) && g.degree(nb[i]) <= 5 && g.degree(nb[j]) <= 5)
                pairs.push_back({nb[i], nb[j]});
    const int p = static_cast<int>(pairs.size());
    std::vector<int> idx;
    for (int k = 0; k <= std::min(p, g.degree(v)); ++k) {
        idx.assign(k, 0);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<std::pair<int, int>> chords;
            chords.reserve(k);
            for (int i : idx) chords.push_back(pairs[i]);
            if (accept(chords)) return make_witness(std::move(chords), "generic");
            // next k-combination of {0..p-1}
            int i = k - 1;
            while (i >= 0 && idx[i] == p - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string ReductionWitness::serialize() const {
    std::ostringstream out;
    if (kind == Kind::VertexDeletion) {
        out << "W vertex " << v << " chords ";
        for (auto [a, b] : chords) out << "(" << a << "," << b << ")";
        out << " tag " << lemma_tag;
    } else {
        out << "W edge " << eu << " " << ev << " tag " << lemma_tag;
    }
    return out.str();
}

bool check_family_membership(const EmbeddedGraph& g, int v,
                             const std::vector<std::pair<int, int>>& chords) {
    if (!g.has_vertex(v)) throw NoSuchVertex("no vertex " + std::to_string(v));
    auto fg = build_family_graph(g, v, chords);
    return fg && family_conditions(g, *fg);
}

std::optional<ReductionWitness> find_vertex_reduction(const EmbeddedGraph& g, int palette) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (auto w = try_vertex(g, v, palette)) return w;
    return std::nullopt;
}

std::optional<ReductionWitness> find_edge_reduction(const EmbeddedGraph& g, int palette) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.rotation(v))
            if (v < u) edges.push_back({v, u});
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
        int na = static_cast<int>(n2_set(g, a).size());
        int nb = static_cast<int>(n2_set(g, b).size());
        int u = a, v = b;
        if (nb > na) {
            std::swap(u, v);
            std::swap(na, nb);
        }
        if (na <= palette && nb <= palette - 1) {
            ReductionWitness w;
            w.kind = ReductionWitness::Kind::EdgeDeletion;
            w.eu = u;
            w.ev = v;
            w.lemma_tag = "edge";
            w.n2_before = {na, nb};
            return w;
        }
    }
    return std::nullopt;
}

ReductionWitness find_reduction(const EmbeddedGraph& g, int palette) {
    if (auto w = find_vertex_reduction(g, palette)) return *w;
    if (auto w = find_edge_reduction(g, palette)) return *w;
    std::string diag = "no reduction found";
    try {
        diag += "; audit:\n" + to_text(audit(g));
    } catch (const Error&) {
        // audit needs connectivity; the bare message still stands
    }
    throw IrreducibleGraph(diag);
}

std::pair<EmbeddedGraph, std::vector<int>> apply_reduction(const EmbeddedGraph& g,
                                                           const ReductionWitness& w) {
    if (w.kind == ReductionWitness::Kind::VertexDeletion) {
        if (!g.has_vertex(w.v)) throw StaleWitness("witness vertex missing");
        std::optional<FamilyGraph> fg;
        try {
            fg = build_family_graph(g, w.v, w.chords);
        } catch (const InvalidChord&) {
            throw StaleWitness("witness chords invalid for this graph");
        }
        if (!fg || !family_conditions(g, *fg))
            throw StaleWitness("witness no longer reduces this graph");
        return {std::move(fg->m), std::move(fg->remap)};
    }
    if (!g.has_edge(w.eu, w.ev)) throw StaleWitness("witness edge missing");
    std::vector<int> identity(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) identity[i] = i;
    return {g.delete_edge(w.eu, w.ev), std::move(identity)};
}

ReductionEngine::ReductionEngine(EmbeddedGraph g, int palette)
    : g_(std::move(g)), palette_(palette), settled_(g_.vertex_count(), 0) {}

std::optional<ReductionEngine::Step> ReductionEngine::step() {
    if (g_.vertex_count() <= 1) return std::nullopt;
    std::optional<ReductionWitness> w;
    for (int v = 0; v < g_.vertex_count() && !w; ++v) {
        if (settled_[v]) continue;
        w = try_vertex(g_, v, palette_);
        if (!w) settled_[v] = 1;
    }
    if (!w) w = find_edge_reduction(g_, palette_);
    if (!w) {
        std::string diag = "no reduction found";
        try {
            diag += "; audit:\n" + to_text(audit(g_));
        } catch (const Error&) {
        }
        throw IrreducibleGraph(diag);
    }

    // Invalidation: a vertex's reducibility depends on its radius-3 structure
    // and on the faces touching it or its neighbors. Collect the edit site and
    // the vertices of every face destroyed by the edit, then dirty everything
    // within reach of either.
    std::vector<char> dirty(g_.vertex_count(), 0);
    std::vector<int> site;      // edited vertices
    std::vector<int> face_hit;  // vertices on changed faces
    if (w->kind == ReductionWitness::Kind::VertexDeletion) {
        site.push_back(w->v);
        for (int u : g_.rotation(w->v)) site.push_back(u);
        for (int s = 0; s < g_.degree(w->v); ++s)
            for (const Dart& d : g_.face(g_.face_of_slot(w->v, s)).walk) face_hit.push_back(d.from);
    } else {
        site.push_back(w->eu);
        site.push_back(w->ev);
        for (const Dart& d : g_.face(g_.face_of_dart(w->eu, w->ev)).walk) face_hit.push_back(d.from);
        for (const Dart& d : g_.face(g_.face_of_dart(w->ev, w->eu)).walk) face_hit.push_back(d.from);
    }
    {  // BFS 3 levels out from the site
        std::vector<int> frontier = site;
        for (int u : site) dirty[u] = 1;
        for (int depth = 0; depth < 3; ++depth) {
            std::vector<int> next;
            for (int u : frontier)
                for (int x : g_.rotation(u))
                    if (!dirty[x]) {
                        dirty[x] = 1;
                        next.push_back(x);
                    }
            frontier = std::move(next);
        }
    }
    for (int u : face_hit) {
        dirty[u] = 1;
        for (int x : g_.rotation(u)) dirty[x] = 1;
    }

    auto [m, remap] = apply_reduction(g_, *w);
    std::vector<char> settled(m.vertex_count(), 0);
    for (int u = 0; u < g_.vertex_count(); ++u)
        if (remap[u] >= 0 && settled_[u] && !dirty[u]) settled[remap[u]] = 1;
    Step out{std::move(g_), std::move(*w), remap};
    g_ = std::move(m);
    settled_ = std::move(settled);
    return out;
}

bool ConfigReport::mentions(const std::string& needle) const {
    for (const auto& it : items)
        if (it.description.find(needle) != std::string::npos) return true;
    return false;
}

ConfigReport classify_forbidden_configs(const EmbeddedGraph& g) {
    ConfigReport r;
    auto add = [&](int v, std::string desc) { r.items.push_back({v, std::move(desc)}); };
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d <= 2) add(v, "vertex of degree " + std::to_string(d));
    }
    // Face-level checks over distinct 3-faces.
    for (int fi = 0; fi < g.face_count(); ++fi) {
        const Face& f = g.face(fi);
        if (f.degree() != 3) continue;
        int mind = 6, maxd = 0;
        for (const Dart& dart : f.walk) {
            mind = std::min(mind, g.degree(dart.from));
            maxd = std::max(maxd, g.degree(dart.from));
        }
        if (mind <= 3) add(f.walk[0].from, "3-face with a vertex of degree <= 3");
        else if (maxd <= 4) add(f.walk[0].from, "3-face with all vertices of degree <= 4");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int d = g.degree(v);
        if (d == 3) {
            for (int u : g.rotation(v))
                if (g.degree(u) != 5) {
                    add(v, "3-vertex with a non-5-valent neighbor");
                    break;
                }
            if (f_count(g, v, 4) >= 2) add(v, "3-vertex on two or more 4-faces");
        } else if (d == 4) {
            const int f3 = f_count(g, v, 3);
            const int f4 = f_count(g, v, 4);
            if (f3 >= 2) add(v, "4-vertex on two or more 3-faces");
            if (f3 == 1) {
                if (f4 >= 3) add(v, "4-vertex on a 3-face and three 4-faces");
                if (f4 == 2) {
                    for (int u : g.rotation(v))
                        if (g.degree(u) <= 4) {
                            add(v, "4-vertex on a 3-face and two 4-faces with a <=4-valent neighbor");
                            break;
                        }
                }
            }
        } else if (d == 5) {
            const auto p = vertex_profile(g, v);
            const int f3 = p.f3();
            const int f4 = p.f4();
            const int n3 = p.n_counts.count(3) ? p.n_counts.at(3) : 0;
            const int n4 = p.n_counts.count(4) ? p.n_counts.at(4) : 0;
            if (f3 == 5) add(v, "5-vertex on five 3-faces");
            if (f3 == 2 && n3 >= 2) add(v, "5-vertex on two 3-faces with two 3-valent neighbors");
            if (f3 == 3 && n3 >= 1) add(v, "5-vertex on three 3-faces with a 3-valent neighbor");
            if (f3 == 3 && f4 == 2 && n4 >= 1)
                add(v, "5-vertex on three 3-faces and two 4-faces with a 4-valent neighbor");
            if (f3 == 3 && f4 == 1 && n4 >= 2)
                add(v, "5-vertex on three 3-faces and a 4-face with two 4-valent neighbors");
            if (f3 == 4) {
                if (f4 >= 1) add(v, "bad 5-vertex on a 4-face");
                for (int u : g.rotation(v))
                    if (g.degree(u) <= 4) {
                        add(v, "bad 5-vertex with a <=4-valent neighbor");
                        break;
                    }
                for (int u : p.corners)
                    if (is_bad_five_vertex(g, u)) {
                        add(v, "bad 5-vertex whose corner is a bad 5-vertex");
                        break;
                    }
            }
        }
    }
    return r;
}

}  // namespace sq17
