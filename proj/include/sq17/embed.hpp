#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sq17/errors.hpp"

namespace sq17 {

// A directed edge. `to` is the neighbor stored in rot(from).
struct Dart {
    int from = -1;
    int to = -1;

    bool operator==(const Dart&) const = default;
};

// One face of the embedding: the cyclic dart walk that traces its boundary.
// degree() counts darts, so a bridge contributes twice to its single face.
struct Face {
    std::vector<Dart> walk;

    int degree() const { return static_cast<int>(walk.size()); }
    // Sorted, deduplicated vertices on the boundary.
    std::vector<int> vertex_set() const;
    bool contains_vertex(int v) const;
};

// Simple plane graph given as a rotation system: for every vertex the cyclic
// counterclockwise order of its neighbors. Immutable after construction; edit
// operations return new graphs. Faces are traced eagerly.
class EmbeddedGraph {
public:
    // Validates symmetry and simplicity, then traces faces.
    static EmbeddedGraph build_from_rotations(int n, std::vector<std::vector<int>> rotations);

    int vertex_count() const { return n_; }
    int edge_count() const { return edges_; }
    int face_count() const { ensure_faces(); return static_cast<int>(faces_.size()); }

    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }
    const std::vector<Face>& faces() const { ensure_faces(); return faces_; }
    const Face& face(int idx) const { ensure_faces(); return faces_[idx]; }

    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    bool has_edge(int u, int v) const;

    // Face index of the outgoing dart (v -> rotation(v)[slot]). Every incidence
    // slot of v maps to exactly one face; these are the f_i(v) slots.
    int face_of_slot(int v, int slot) const { ensure_faces(); return slot_face_[dart_off_[v] + slot]; }
    int face_of_dart(int u, int v) const;

    int component_count() const;
    bool connected() const { return component_count() <= 1; }
    int max_degree() const;

    // Edits. delete_vertex compacts ids and returns old->new (deleted -> -1).
    std::pair<EmbeddedGraph, std::vector<int>> delete_vertex(int v) const;
    EmbeddedGraph delete_edge(int u, int v) const;
    // Splits face `face_idx` by the chord u-w; both endpoints must lie on it.
    EmbeddedGraph add_chord(int u, int w, int face_idx) const;
    // Planar edge insertion without a caller-chosen face: picks the first face
    // containing both endpoints; handles isolated endpoints by attaching them
    // inside a face of the other (or as a new component when both isolated).
    EmbeddedGraph add_edge_planar(int u, int w) const;

private:
    EmbeddedGraph() = default;
    // Edits derived from a valid graph stay valid; skip re-validation.
    static EmbeddedGraph from_rotations_unchecked(int n, std::vector<std::vector<int>> rotations);
    void validate() const;
    // Traced on first use; many intermediate graphs never need their faces.
    void ensure_faces() const { if (!traced_) trace_faces(); }
    void trace_faces() const;

    int n_ = 0;
    int edges_ = 0;
    std::vector<std::vector<int>> rot_;
    mutable bool traced_ = false;
    mutable std::vector<Face> faces_;
    mutable std::vector<int> dart_off_;   // dart_off_[v]: flat index of (v, slot 0)
    mutable std::vector<int> slot_face_;  // indexed by dart_off_[v] + slot
};

struct EulerReport {
    int components = 0;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    bool euler_ok = false;
};

EulerReport euler_report(const EmbeddedGraph& g);

// EPG text format.
EmbeddedGraph parse_epg(std::istream& in);
EmbeddedGraph parse_epg_string(const std::string& text);
std::string to_epg(const EmbeddedGraph& g);

}  // namespace sq17
