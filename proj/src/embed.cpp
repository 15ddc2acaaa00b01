#include "sq17/embed.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace sq17 {

std::vector<int> Face::vertex_set() const {
    std::vector<int> vs;
    vs.reserve(walk.size());
    for (const Dart& d : walk) vs.push_back(d.from);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool Face::contains_vertex(int v) const {
    for (const Dart& d : walk)
        if (d.from == v) return true;
    return false;
}

EmbeddedGraph EmbeddedGraph::build_from_rotations(int n, std::vector<std::vector<int>> rotations) {
    if (n < 0 || static_cast<int>(rotations.size()) != n)
        throw IdOutOfRange("vertex count does not match rotation table size");
    EmbeddedGraph g;
    g.n_ = n;
    g.rot_ = std::move(rotations);
    g.validate();
    int darts = 0;
    for (const auto& r : g.rot_) darts += static_cast<int>(r.size());
    g.edges_ = darts / 2;
    return g;
}

EmbeddedGraph EmbeddedGraph::from_rotations_unchecked(int n, std::vector<std::vector<int>> rotations) {
    EmbeddedGraph g;
    g.n_ = n;
    g.rot_ = std::move(rotations);
    int darts = 0;
    for (const auto& r : g.rot_) darts += static_cast<int>(r.size());
    g.edges_ = darts / 2;
    return g;
}

void EmbeddedGraph::validate() const {
    for (int v = 0; v < n_; ++v) {
        std::vector<int> seen;
        for (int u : rot_[v]) {
            if (u < 0 || u >= n_)
                throw IdOutOfRange("neighbor " + std::to_string(u) + " of vertex " + std::to_string(v) + " out of range");
            if (u == v)
                throw SelfLoop("loop at vertex " + std::to_string(v));
            if (std::find(seen.begin(), seen.end(), u) != seen.end())
                throw DuplicateNeighbor("vertex " + std::to_string(v) + " lists neighbor " + std::to_string(u) + " twice");
            seen.push_back(u);
        }
    }
    for (int v = 0; v < n_; ++v)
        for (int u : rot_[v]) {
            const auto& r = rot_[u];
            if (std::find(r.begin(), r.end(), v) == r.end())
                throw AsymmetricAdjacency("edge " + std::to_string(v) + "-" + std::to_string(u) + " missing reverse direction");
        }
}

void EmbeddedGraph::trace_faces() const {
    traced_ = true;
    faces_.clear();
    dart_off_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v)
        dart_off_[v + 1] = dart_off_[v] + static_cast<int>(rot_[v].size());
    const int darts = dart_off_[n_];
    slot_face_.assign(darts, -1);

    // Bucket darts by target vertex, then resolve each dart's reverse slot via
    // a scratch table per target. The successor of dart d = (v -> w) leaves w
    // at the slot after v's position in rot(w).
    std::vector<int> inbox(darts);
    {
        std::vector<int> fill(n_, 0);
        for (int v = 0; v < n_; ++v)
            for (int u : rot_[v]) ++fill[u];
        std::vector<int> start(n_ + 1, 0);
        for (int v = 0; v < n_; ++v) start[v + 1] = start[v] + fill[v];
        std::fill(fill.begin(), fill.end(), 0);
        for (int v = 0; v < n_; ++v)
            for (size_t s = 0; s < rot_[v].size(); ++s) {
                const int w = rot_[v][s];
                inbox[start[w] + fill[w]++] = dart_off_[v] + static_cast<int>(s);
            }
        std::vector<int> next(darts);
        std::vector<int> scratch(n_);
        std::vector<int> dfrom(darts);
        for (int v = 0; v < n_; ++v)
            for (size_t s = 0; s < rot_[v].size(); ++s) dfrom[dart_off_[v] + s] = v;
        for (int w = 0; w < n_; ++w) {
            const int deg_w = static_cast<int>(rot_[w].size());
            for (int j = 0; j < deg_w; ++j) scratch[rot_[w][j]] = j;
            for (int i = start[w]; i < start[w + 1]; ++i) {
                const int d = inbox[i];
                next[d] = dart_off_[w] + (scratch[dfrom[d]] + 1) % deg_w;
            }
        }
        inbox = std::move(next);
    }
    const std::vector<int>& next = inbox;

    std::vector<Dart> buf;
    for (int v = 0; v < n_; ++v) {
        for (size_t s = 0; s < rot_[v].size(); ++s) {
            const int d0 = dart_off_[v] + static_cast<int>(s);
            if (slot_face_[d0] != -1) continue;
            const int fid = static_cast<int>(faces_.size());
            buf.clear();
            int cu = v;
            int cs = static_cast<int>(s);
            int d = d0;
            do {
                slot_face_[d] = fid;
                const int cv = rot_[cu][cs];
                buf.push_back({cu, cv});
                d = next[d];
                cu = cv;
                cs = d - dart_off_[cu];
            } while (d != d0);
            Face f;
            f.walk.assign(buf.begin(), buf.end());
            faces_.push_back(std::move(f));
        }
    }
}

bool EmbeddedGraph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& r = rot_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

int EmbeddedGraph::face_of_dart(int u, int v) const {
    const auto& r = rot_[u];
    auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end()) throw NoSuchEdge("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return face_of_slot(u, static_cast<int>(it - r.begin()));
}

int EmbeddedGraph::component_count() const {
    std::vector<char> vis(n_, 0);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (vis[s]) continue;
        ++comps;
        stack.push_back(s);
        vis[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : rot_[v])
                if (!vis[u]) {
                    vis[u] = 1;
                    stack.push_back(u);
                }
        }
    }
    return comps;
}

int EmbeddedGraph::max_degree() const {
    int d = 0;
    for (const auto& r : rot_) d = std::max(d, static_cast<int>(r.size()));
    return d;
}

std::pair<EmbeddedGraph, std::vector<int>> EmbeddedGraph::delete_vertex(int v) const {
    if (!has_vertex(v)) throw NoSuchVertex("no vertex " + std::to_string(v));
    std::vector<int> remap(n_, -1);
    int next = 0;
    for (int i = 0; i < n_; ++i)
        if (i != v) remap[i] = next++;
    std::vector<std::vector<int>> rot(n_ - 1);
    for (int i = 0; i < n_; ++i) {
        if (i == v) continue;
        auto& r = rot[remap[i]];
        r.reserve(rot_[i].size());
        for (int u : rot_[i])
            if (u != v) r.push_back(remap[u]);
    }
    return {from_rotations_unchecked(n_ - 1, std::move(rot)), std::move(remap)};
}

EmbeddedGraph EmbeddedGraph::delete_edge(int u, int v) const {
    if (!has_edge(u, v)) throw NoSuchEdge("no edge " + std::to_string(u) + "-" + std::to_string(v));
    std::vector<std::vector<int>> rot = rot_;
    std::erase(rot[u], v);
    std::erase(rot[v], u);
    return from_rotations_unchecked(n_, std::move(rot));
}

EmbeddedGraph EmbeddedGraph::add_chord(int u, int w, int face_idx) const {
    if (!has_vertex(u) || !has_vertex(w)) throw NoSuchVertex("chord endpoint out of range");
    if (u == w) throw InvalidChord("chord endpoints coincide");
    if (has_edge(u, w)) throw EdgeExists("edge " + std::to_string(u) + "-" + std::to_string(w) + " already present");
    if (face_idx < 0 || face_idx >= face_count()) throw NotOnSameFace("no such face");
    const Face& f = faces_[face_idx];
    if (!f.contains_vertex(u) || !f.contains_vertex(w))
        throw NotOnSameFace("chord endpoints not both on the face");
    // First corner of each endpoint on the walk: the dart arriving at it.
    auto corner_pred = [&](int v) -> int {
        const int k = f.degree();
        for (int i = 0; i < k; ++i)
            if (f.walk[i].to == v) return f.walk[i].from;
        return -1;
    };
    const int pu = corner_pred(u);
    const int pw = corner_pred(w);
    std::vector<std::vector<int>> rot = rot_;
    auto insert_after = [&](int v, int after, int nb) {
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), after);
        r.insert(it + 1, nb);
    };
    insert_after(u, pu, w);
    insert_after(w, pw, u);
    return from_rotations_unchecked(n_, std::move(rot));
}

EmbeddedGraph EmbeddedGraph::add_edge_planar(int u, int w) const {
    if (!has_vertex(u) || !has_vertex(w)) throw NoSuchVertex("edge endpoint out of range");
    if (u == w) throw InvalidChord("edge endpoints coincide");
    if (has_edge(u, w)) throw EdgeExists("edge already present");
    if (degree(u) > 0 && degree(w) > 0) {
        for (int fi = 0; fi < face_count(); ++fi)
            if (faces_[fi].contains_vertex(u) && faces_[fi].contains_vertex(w))
                return add_chord(u, w, fi);
        throw NotOnSameFace("endpoints share no face");
    }
    // At least one endpoint is isolated; attaching it creates a bridge and
    // splits no face, so the rotation surgery is direct.
    std::vector<std::vector<int>> rot = rot_;
    if (degree(u) == 0 && degree(w) == 0) {
        rot[u].push_back(w);
        rot[w].push_back(u);
    } else {
        const int attached = degree(u) == 0 ? w : u;
        const int isolated = degree(u) == 0 ? u : w;
        rot[isolated].push_back(attached);
        rot[attached].push_back(isolated);
    }
    return from_rotations_unchecked(n_, std::move(rot));
}

EulerReport euler_report(const EmbeddedGraph& g) {
    EulerReport r;
    r.components = g.component_count();
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.faces = g.face_count();
    const bool k1 = r.vertices == 1 && r.edges == 0;  // single vertex: one face, no darts
    r.euler_ok = r.components == 1 && (k1 || r.vertices - r.edges + r.faces == 2);
    return r;
}

EmbeddedGraph parse_epg(std::istream& in) {
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
    if (!next_line() || line != "epg 1") throw fail("expected header 'epg 1'");
    if (!next_line()) throw fail("expected vertex count");
    int n = -1;
    {
        std::istringstream ss(line);
        std::string kw;
        if (!(ss >> kw >> n) || kw != "n" || n < 0) throw fail("expected 'n <count>'");
    }
    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (!next_line()) throw fail("expected " + std::to_string(n) + " vertex lines");
        std::istringstream ss(line);
        std::string kw, idtok;
        if (!(ss >> kw >> idtok) || kw != "v" || idtok.empty() || idtok.back() != ':')
            throw fail("expected 'v <id>: <neighbors>'");
        int id;
        try {
            id = std::stoi(idtok.substr(0, idtok.size() - 1));
        } catch (const std::exception&) {
            throw fail("bad vertex id");
        }
        if (id < 0 || id >= n) throw fail("vertex id out of range");
        if (seen[id]) throw fail("duplicate vertex line for " + std::to_string(id));
        seen[id] = 1;
        int nb;
        while (ss >> nb) rot[id].push_back(nb);
        if (!ss.eof()) throw fail("bad neighbor list");
    }
    return EmbeddedGraph::build_from_rotations(n, std::move(rot));
}

EmbeddedGraph parse_epg_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_epg(ss);
}

std::string to_epg(const EmbeddedGraph& g) {
    std::ostringstream out;
    out << "epg 1\n";
    out << "n " << g.vertex_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "v " << v << ":";
        for (int u : g.rotation(v)) out << " " << u;
        out << "\n";
    }
    return out.str();
}

}  // namespace sq17
