#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "projlink/graph.hpp"
#include "projlink/minors.hpp"  // ResourceLimitError

namespace projlink {

/// Combinatorial embedding in the projective plane (or the sphere): a rotation
/// system plus a Z2 edge signature. An edge has signature -1 when it crosses
/// the cross-cap boundary an odd number of times in the drawing it encodes.
struct Rp2Embedding {
    Graph graph;
    std::vector<std::vector<int>> rotation;  // rotation[v] = cyclic neighbor order
    std::set<Edge> negative_edges;           // edges with signature -1 (u < v)

    int sign(int u, int v) const {
        if (u > v) std::swap(u, v);
        return negative_edges.count({u, v}) ? -1 : 1;
    }

    bool operator==(const Rp2Embedding& o) const {
        return graph == o.graph && rotation == o.rotation && negative_edges == o.negative_edges;
    }
    bool operator<(const Rp2Embedding& o) const {
        if (!(graph == o.graph)) return graph < o.graph;
        if (rotation != o.rotation) return rotation < o.rotation;
        return negative_edges < o.negative_edges;
    }
};

class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A face boundary walk: the sequence of darts (tail, head) traversed.
using FaceWalk = std::vector<std::pair<int, int>>;

/// Structural check: every rotation lists exactly the incident edges, once
/// each, and every negative edge exists. Throws EmbeddingError otherwise.
void validate_structure(const Rp2Embedding& emb);

/// Face tracing with orientation reversal across negative edges. Every dart
/// appears in exactly one returned walk; the walks are deterministic.
std::vector<FaceWalk> trace_faces(const Rp2Embedding& emb);

/// V - E + F. A cellular projective-plane embedding has 1; a plane drawing
/// placed in the projective plane has 2 (with a switching-trivial signature).
int euler_value(const Rp2Embedding& emb);

/// True when every cycle has signature product +1, i.e. the signature can be
/// switched to all-positive.
bool signature_is_trivial(const Rp2Embedding& emb);

/// Full validity: structure holds, the graph is connected, and the Euler value
/// is 1, or 2 with a switching-trivial signature.
bool is_valid_embedding(const Rp2Embedding& emb);

/// Cycle given as a vertex sequence v0, v1, ..., v_{k-1} (edges vi -- v_{i+1}
/// and v_{k-1} -- v0); no repeated vertices, k >= 3.
using EmbCycle = std::vector<int>;

/// 0 when the signature product along the cycle is +1, 1 when it is -1.
/// Throws EmbeddingError if c is not a cycle of the graph.
int cycle_homology(const Rp2Embedding& emb, const EmbCycle& c);

/// Edges with signature -1, verbatim from the fixed drawing.
std::vector<Edge> one_homologous_edges(const Rp2Embedding& emb);

/// Negate the signature of every edge at v. Faces and cycle homology are
/// unchanged; the negative edge set generally is not.
Rp2Embedding switch_vertex(const Rp2Embedding& emb, int v);

/// Reverse every rotation (the mirror drawing). Same faces up to direction.
Rp2Embedding reflect(const Rp2Embedding& emb);

/// For a 0-homologous cycle: the two vertex sets on either side of the disk
/// bounded by c, computed by two-coloring faces across non-cycle edges. The
/// side containing the lowest off-cycle vertex comes first. Throws
/// EmbeddingError when cycle_homology(emb, c) != 0.
std::pair<std::vector<int>, std::vector<int>> disk_sides(const Rp2Embedding& emb,
                                                         const EmbCycle& c);

bool is_separating_cycle_0(const Rp2Embedding& emb, const EmbCycle& c);

/// For a 1-homologous cycle: cut the surface along c (giving a disk whose
/// boundary carries two copies of c) and assign each off-cycle component to
/// the boundary copy it attaches to. Components attaching to both copies, or
/// to neither, belong to neither side.
std::pair<std::vector<int>, std::vector<int>> sides_of_1hom_cycle(const Rp2Embedding& emb,
                                                                  const EmbCycle& c);

inline constexpr uint64_t kDefaultCycleBudget = 1'000'000;

/// All simple cycles of g, each reported once (lowest vertex first, lower
/// neighbor second). Throws ResourceLimitError past the budget.
std::vector<EmbCycle> enumerate_simple_cycles(const Graph& g,
                                              uint64_t budget = kDefaultCycleBudget);

/// True iff no 0-homologous simple cycle has vertices on both disk sides.
bool is_nonseparating_embedding(const Rp2Embedding& emb,
                                uint64_t cycle_budget = kDefaultCycleBudget);

/// True iff some 1-homologous simple cycle has off-cycle vertices attached to
/// both boundary copies exclusively (one component each side).
bool has_separating_1hom_cycle(const Rp2Embedding& emb,
                               uint64_t cycle_budget = kDefaultCycleBudget);

inline constexpr uint64_t kDefaultEmbedBudget = 200'000'000;

/// All embeddings of a connected graph into the sphere or projective plane,
/// one representative per equivalence class under vertex switching and
/// reflection. Signatures are spanning-tree normalized (tree edges positive).
/// Built by inserting edges one at a time into partial embeddings, pruning
/// whenever the Euler value drops below 1. Throws ResourceLimitError past the
/// node budget. With `first_only`, stops after one embedding.
std::vector<Rp2Embedding> enumerate_rp2_embeddings(const Graph& g,
                                                   uint64_t budget = kDefaultEmbedBudget,
                                                   bool first_only = false,
                                                   int max_results = -1);

/// Existence check driven by the same search: does a (possibly disconnected)
/// graph embed in the projective plane? Disconnected graphs embed iff at most
/// one component is nonplanar and that component embeds.
bool embeds_in_rp2(const Graph& g, uint64_t budget = kDefaultEmbedBudget);

/// Local surgery realizing the Y-Delta exchange at a degree-3 vertex v inside
/// the embedding: v is removed and the triangle on its neighbors is drawn in
/// the freed disk. Requires that no two neighbors of v are already adjacent.
Rp2Embedding y_delta_embedding(const Rp2Embedding& emb, int v);

/// Text format: '#' comments; header "n m"; per-vertex lines "r v: n1 n2 ...";
/// optional lines "s u v -" marking negative edges.
Rp2Embedding read_embedding(std::istream& in);
Rp2Embedding read_embedding_file(const std::string& path);
void write_embedding(std::ostream& out, const Rp2Embedding& emb);
void write_embedding_file(const std::string& path, const Rp2Embedding& emb);

}  // namespace projlink
