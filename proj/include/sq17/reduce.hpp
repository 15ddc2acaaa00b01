#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sq17/embed.hpp"

namespace sq17 {

// Palette size the completeness guarantee is proved for. Reduction thresholds
// are palette-1 and palette; overriding is for experimentation only.
inline constexpr int kPaletteSize = 17;

// A certified reducible configuration: delete a vertex and re-chord its former
// neighbors, or delete a single edge.
struct ReductionWitness {
    enum class Kind { VertexDeletion, EdgeDeletion };

    Kind kind = Kind::VertexDeletion;
    int v = -1;                                 // vertex case
    std::vector<std::pair<int, int>> chords;    // vertex case, applied in order
    int eu = -1, ev = -1;                       // edge case, |N2(eu)| >= |N2(ev)|
    std::string lemma_tag;
    std::vector<int> n2_before;                 // |N2| values used in the match

    std::string serialize() const;
};

// True iff deleting v and inserting the chords yields a plane graph M whose
// former neighbors of v are pairwise within distance 2, with max degree <= 5
// and strictly smaller |V|+|E|. Chords that are not neighbor pairs of v or
// duplicate existing edges raise InvalidChord; chord sets that cannot be
// embedded simply fail the check.
bool check_family_membership(const EmbeddedGraph& g, int v,
                             const std::vector<std::pair<int, int>>& chords);

std::optional<ReductionWitness> find_vertex_reduction(const EmbeddedGraph& g,
                                                      int palette = kPaletteSize);
std::optional<ReductionWitness> find_edge_reduction(const EmbeddedGraph& g,
                                                    int palette = kPaletteSize);

// Vertex reduction first, then edge reduction. Throws IrreducibleGraph (with
// an attached discharging audit) if neither exists; on connected plane graphs
// with max degree <= 5 that signals a bug or a non-conforming input.
ReductionWitness find_reduction(const EmbeddedGraph& g, int palette = kPaletteSize);

// Applies the witness; result has strictly smaller |V|+|E|. The id remap is
// old->new for vertex deletions and the identity for edge deletions.
std::pair<EmbeddedGraph, std::vector<int>> apply_reduction(const EmbeddedGraph& g,
                                                           const ReductionWitness& w);

// Drives the reduction chain for one graph. Equivalent to calling
// find_reduction / apply_reduction in a loop, but caches which vertices are
// known irreducible and re-examines only those near each edit, which keeps
// long chains near-linear.
class ReductionEngine {
public:
    ReductionEngine(EmbeddedGraph g, int palette = kPaletteSize);

    const EmbeddedGraph& graph() const { return g_; }

    struct Step {
        EmbeddedGraph before;
        ReductionWitness witness;
        std::vector<int> remap;
    };

    // Applies one reduction; empty once |V| <= 1.
    std::optional<Step> step();

private:
    EmbeddedGraph g_;
    int palette_;
    std::vector<char> settled_;  // vertex known to have no vertex reduction
};

// One structure forbidden in a minimal counterexample, found in g.
struct ForbiddenConfig {
    int vertex = -1;  // primary vertex of the configuration (-1: face-level)
    std::string description;
};

struct ConfigReport {
    std::vector<ForbiddenConfig> items;

    bool empty() const { return items.empty(); }
    bool mentions(const std::string& needle) const;
};

ConfigReport classify_forbidden_configs(const EmbeddedGraph& g);

}  // namespace sq17
