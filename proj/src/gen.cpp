#include "sq17/gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace sq17 {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec3 normalize(const Vec3& a) {
    const double l = std::sqrt(dot(a, a));
    return {a[0] / l, a[1] / l, a[2] / l};
}

// Rotations of a straight-line plane drawing: neighbors by CCW angle.
EmbeddedGraph from_points_2d(const std::vector<std::pair<double, double>>& pts,
                             const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> rot(n);
    for (auto [u, v] : edges) {
        rot[u].push_back(v);
        rot[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            const double aa = std::atan2(pts[a].second - pts[v].second, pts[a].first - pts[v].first);
            const double ab = std::atan2(pts[b].second - pts[v].second, pts[b].first - pts[v].first);
            return aa < ab;
        });
    }
    return EmbeddedGraph::build_from_rotations(n, std::move(rot));
}

// Rotations of a convex polyhedron centered at the origin: neighbors by angle
// in the tangent plane, oriented by the outward normal.
EmbeddedGraph from_points_3d(const std::vector<Vec3>& pts,
                             const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> rot(n);
    for (auto [u, v] : edges) {
        rot[u].push_back(v);
        rot[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        const Vec3 nrm = normalize(pts[v]);
        // Any basis vector not parallel to the normal.
        Vec3 ref = std::abs(nrm[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        Vec3 e1 = normalize(cross(ref, nrm));
        Vec3 e2 = cross(nrm, e1);
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            const Vec3 da = sub(pts[a], pts[v]);
            const Vec3 db = sub(pts[b], pts[v]);
            return std::atan2(dot(da, e2), dot(da, e1)) < std::atan2(dot(db, e2), dot(db, e1));
        });
    }
    return EmbeddedGraph::build_from_rotations(n, std::move(rot));
}

std::vector<std::pair<int, int>> edges_by_min_distance(const std::vector<Vec3>& pts) {
    double best = 1e18;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec3 d = sub(pts[i], pts[j]);
            best = std::min(best, dot(d, d));
        }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec3 d = sub(pts[i], pts[j]);
            if (dot(d, d) < best * 1.0001) edges.push_back({i, j});
        }
    return edges;
}

EmbeddedGraph make_path(int k) {
    if (k < 1) throw UnknownName("path length must be >= 1");
    std::vector<std::vector<int>> rot(k);
    for (int i = 0; i + 1 < k; ++i) {
        rot[i].push_back(i + 1);
        rot[i + 1].push_back(i);
    }
    // Rotation order along a path: previous neighbor first.
    for (int i = 1; i + 1 < k; ++i) rot[i] = {i - 1, i + 1};
    return EmbeddedGraph::build_from_rotations(k, std::move(rot));
}

EmbeddedGraph make_cycle(int k) {
    if (k < 3) throw UnknownName("cycle length must be >= 3");
    std::vector<std::vector<int>> rot(k);
    for (int i = 0; i < k; ++i) rot[i] = {(i + k - 1) % k, (i + 1) % k};
    return EmbeddedGraph::build_from_rotations(k, std::move(rot));
}

EmbeddedGraph make_grid(int a, int b) {
    if (a < 1 || b < 1) throw UnknownName("grid sides must be >= 1");
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c) {
            pts.push_back({static_cast<double>(c), static_cast<double>(r)});
            const int id = r * b + c;
            if (c + 1 < b) edges.push_back({id, id + 1});
            if (r + 1 < a) edges.push_back({id, id + b});
        }
    return from_points_2d(pts, edges);
}

EmbeddedGraph make_prism(int k) {
    if (k < 3) throw UnknownName("prism base must be >= 3");
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        const double a = 2.0 * M_PI * i / k;
        pts.push_back({2.0 * std::cos(a), 2.0 * std::sin(a)});
    }
    for (int i = 0; i < k; ++i) {
        const double a = 2.0 * M_PI * i / k;
        pts.push_back({std::cos(a), std::sin(a)});
    }
    for (int i = 0; i < k; ++i) {
        edges.push_back({i, (i + 1) % k});
        edges.push_back({k + i, k + (i + 1) % k});
        edges.push_back({i, k + i});
    }
    return from_points_2d(pts, edges);
}

EmbeddedGraph make_bowtie() {
    std::vector<std::pair<double, double>> pts = {
        {0, 0}, {-2, 1}, {-2, -1}, {2, -1}, {2, 1}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
    return from_points_2d(pts, edges);
}

EmbeddedGraph make_k4() {
    std::vector<std::pair<double, double>> pts = {{0, 0}, {0, 2}, {-2, -1}, {2, -1}};
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return from_points_2d(pts, edges);
}

EmbeddedGraph make_icosahedron() {
    const double p = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> pts;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            pts.push_back({0, s1, s2 * p});
            pts.push_back({s1, s2 * p, 0});
            pts.push_back({s2 * p, 0, s1});
        }
    return from_points_3d(pts, edges_by_min_distance(pts));
}

EmbeddedGraph make_dodecahedron() {
    const double p = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> pts;
    for (double sx : {-1.0, 1.0})
        for (double sy : {-1.0, 1.0})
            for (double sz : {-1.0, 1.0}) pts.push_back({sx, sy, sz});
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            pts.push_back({0, s1 / p, s2 * p});
            pts.push_back({s1 / p, s2 * p, 0});
            pts.push_back({s2 * p, 0, s1 / p});
        }
    return from_points_3d(pts, edges_by_min_distance(pts));
}

// name is "<base>-<k>" or "<base>-<a>-<b>"; returns trailing ints.
std::vector<int> suffix_ints(const std::string& name, const std::string& base) {
    std::vector<int> out;
    std::string rest = name.substr(base.size());
    size_t pos = 0;
    while (pos < rest.size()) {
        if (rest[pos] != '-') throw UnknownName("unknown graph name: " + name);
        size_t end = pos + 1;
        while (end < rest.size() && rest[end] != '-') ++end;
        try {
            out.push_back(std::stoi(rest.substr(pos + 1, end - pos - 1)));
        } catch (const std::exception&) {
            throw UnknownName("unknown graph name: " + name);
        }
        pos = end;
    }
    return out;
}

// Insert a new vertex inside triangular face `fi`, splitting it into three.
EmbeddedGraph insert_vertex_in_triangle(const EmbeddedGraph& g, int fi) {
    const Face& f = g.face(fi);
    const int a = f.walk[0].from;
    const int b = f.walk[1].from;
    const int c = f.walk[2].from;
    const int w = g.vertex_count();
    std::vector<std::vector<int>> rot = g.rotations();
    rot.push_back({a, c, b});
    auto insert_after = [&](int v, int after) {
        auto it = std::find(rot[v].begin(), rot[v].end(), after);
        rot[v].insert(it + 1, w);
    };
    insert_after(a, c);
    insert_after(b, a);
    insert_after(c, b);
    return EmbeddedGraph::build_from_rotations(w + 1, std::move(rot));
}

}  // namespace

EmbeddedGraph named_graph(const std::string& name) {
    if (name == "icosahedron") return make_icosahedron();
    if (name == "dodecahedron") return make_dodecahedron();
    if (name == "bowtie") return make_bowtie();
    if (name == "k4") return make_k4();
    if (name.rfind("path-", 0) == 0) {
        auto k = suffix_ints(name, "path");
        if (k.size() == 1) return make_path(k[0]);
    } else if (name.rfind("cycle-", 0) == 0) {
        auto k = suffix_ints(name, "cycle");
        if (k.size() == 1) return make_cycle(k[0]);
    } else if (name.rfind("grid-", 0) == 0) {
        auto k = suffix_ints(name, "grid");
        if (k.size() == 2) return make_grid(k[0], k[1]);
    } else if (name.rfind("prism-", 0) == 0) {
        auto k = suffix_ints(name, "prism");
        if (k.size() == 1) return make_prism(k[0]);
    }
    throw UnknownName("unknown graph name: " + name);
}

std::vector<std::string> named_instances() {
    return {"path-2",  "path-3",  "path-5",   "path-10", "cycle-3", "cycle-4",
            "cycle-5", "cycle-8", "grid-2-2", "grid-3-3", "grid-4-6", "prism-3",
            "prism-5", "prism-8", "bowtie",   "k4",      "icosahedron", "dodecahedron"};
}

EmbeddedGraph gen_random_delta5(const GenSpec& spec) {
    if (spec.n < 3) throw Unsatisfiable("need n >= 3");
    std::mt19937_64 rng(spec.seed);
    // mt19937_64 output is specified bit-exactly; plain modulo keeps the draw
    // platform independent (std distributions are not).
    EmbeddedGraph g = make_cycle(3);
    while (g.vertex_count() < spec.n) {
        const int fi = static_cast<int>(rng() % static_cast<std::uint64_t>(g.face_count()));
        g = insert_vertex_in_triangle(g, fi);
    }
    // Degree capping: delete edges at the max-degree vertex, never a bridge.
    while (g.max_degree() > 5) {
        int v = 0;
        for (int i = 1; i < g.vertex_count(); ++i)
            if (g.degree(i) > g.degree(v)) v = i;
        std::vector<int> nbs(g.rotation(v).begin(), g.rotation(v).end());
        std::sort(nbs.begin(), nbs.end(), [&](int x, int y) {
            if (g.degree(x) != g.degree(y)) return g.degree(x) > g.degree(y);
            return x < y;
        });
        bool deleted = false;
        for (int u : nbs) {
            EmbeddedGraph h = g.delete_edge(v, u);
            if (h.connected()) {
                g = std::move(h);
                deleted = true;
                break;
            }
        }
        if (!deleted)
            throw Error("degree capping stuck at vertex " + std::to_string(v));
    }
    return g;
}

std::vector<GenSpec> corpus_specs() {
    static const int sizes[] = {5, 10, 25, 50, 100, 300};
    std::vector<GenSpec> out;
    out.reserve(1000);
    for (std::uint64_t seed = 1; seed <= 1000; ++seed)
        out.push_back({sizes[(seed - 1) % 6], seed});
    return out;
}

}  // namespace sq17
