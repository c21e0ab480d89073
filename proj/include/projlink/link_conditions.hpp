#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projlink/embedding.hpp"

namespace projlink {

/// Raised when a predicate is asked about a drawing that does not satisfy its
/// hypothesis (e.g. the 0/1-link test on a separating drawing).
class LinkPreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Shape of the negative (1-homologous) edge set of a drawing: all sharing a
/// vertex, exactly three forming a triangle, or neither.
enum class CaseKind { Star, Triangle, Neither };

struct CaseClass {
    CaseKind kind;
    int v0 = -1, v1 = -1, v2 = -1;  // Star uses v0; Triangle uses all three
    bool operator==(const CaseClass&) const = default;
};

/// Remove a set of edges from a drawing, restricting rotations and signature.
Rp2Embedding delete_edges(const Rp2Embedding& emb, const std::vector<Edge>& edges);

/// True iff the drawing has no separating 0-homologous cycle; the witness is
/// such a cycle when one exists.
std::pair<bool, std::optional<EmbCycle>> no_link_00(const Rp2Embedding& emb,
                                                    uint64_t cycle_budget = kDefaultCycleBudget);

/// Defined only for nonseparating drawings: true iff there is no separating
/// 1-homologous cycle. Throws LinkPreconditionError otherwise.
std::pair<bool, std::optional<EmbCycle>> no_link_01(const Rp2Embedding& emb,
                                                    uint64_t cycle_budget = kDefaultCycleBudget);

/// Classify the negative edge set. An empty set is Star with v0 = vertex 0 by
/// convention; a Star reports the lowest shared vertex.
CaseClass classify_case(const Rp2Embedding& emb);

/// True iff every pair of negative edges shares a vertex; equivalently (the
/// structure theorem) the classification is not Neither. When false, the
/// witness is a disjoint pair of negative edges.
std::pair<bool, std::vector<Edge>> no_link_11(const Rp2Embedding& emb);

/// Star-case reduction: with V0/V1 the positive/negative edges at the shared
/// vertex, the drawing has no 0/0 link iff both reduced drawings (drop V0,
/// drop V1) are nonseparating. Throws LinkPreconditionError unless Star.
bool case1_no_link_00(const Rp2Embedding& emb, uint64_t cycle_budget = kDefaultCycleBudget);

/// Triangle-case reduction: all three drawings obtained by dropping one
/// negative triangle edge must be nonseparating. Throws unless Triangle.
bool case2_no_link_00(const Rp2Embedding& emb, uint64_t cycle_budget = kDefaultCycleBudget);

enum class PlanarClass { Outerplanar, Wheel, ElongatedTriangularPrism, None };

/// Structural recognition of the three nonseparating-planar families:
/// Outerplanar (forbidden minors), Wheel = subgraph of a wheel (some vertex
/// whose removal leaves disjoint paths or a spanning cycle), and elongated
/// triangular prism (two triangles joined by three equal-length vertex-
/// disjoint paths). The wheel family must be read subgraph-closed or the
/// trichotomy fails (e.g. K_{2,3} is a subgraph of the 4-spoke wheel but is
/// neither outerplanar nor a wheel itself). Throws std::invalid_argument when
/// g is not planar.
PlanarClass nonseparating_planar_class(const Graph& g);

struct LinkReport {
    bool no_link_00 = false;
    std::optional<EmbCycle> witness_00;
    std::optional<bool> no_link_01;  // nullopt: hypothesis unmet, not applicable
    std::optional<EmbCycle> witness_01;
    bool no_link_11 = false;
    std::vector<Edge> witness_11;
    CaseClass case_class{CaseKind::Neither};
};

LinkReport link_report(const Rp2Embedding& emb, uint64_t cycle_budget = kDefaultCycleBudget);

std::string format_case(const CaseClass& c);

/// One TSV row: drawing, no_link_00, no_link_01, no_link_11, case, witness.
std::string report_tsv_row(const std::string& drawing_name, const LinkReport& r);

inline constexpr const char* kReportTsvHeader =
    "drawing\tno_link_00\tno_link_01\tno_link_11\tcase\twitness";

}  // namespace projlink
