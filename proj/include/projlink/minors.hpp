#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "projlink/graph.hpp"

namespace projlink {

/// Search ran out of its node budget; deliberately distinct from "absent".
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Branch-set witness that a pattern is a minor of a host: branch_sets[k] is
/// the host-vertex mask assigned to pattern vertex k.
struct MinorCertificate {
    std::vector<uint32_t> branch_sets;
};

inline constexpr uint64_t kDefaultMinorBudget = 50'000'000;

/// True iff the branch sets are nonempty, pairwise disjoint, each connected in
/// the host, and every pattern edge has a host edge between its branch sets.
bool verify_certificate(const Graph& host, const Graph& pattern, const MinorCertificate& cert);

/// Branch-and-bound minor containment. Returns a verified certificate when the
/// pattern is a minor of the host, nullopt when it is not, and throws
/// ResourceLimitError when the node budget runs out.
std::optional<MinorCertificate> has_minor(const Graph& host, const Graph& pattern,
                                          uint64_t budget = kDefaultMinorBudget);

/// Kuratowski-Wagner: planar iff no K5 and no K3,3 minor.
bool is_planar(const Graph& g);

/// Outerplanar iff no K4 and no K2,3 minor.
bool is_outerplanar(const Graph& g);

/// Named obstruction catalog (forbidden-minor list for some property).
struct ObstructionSet {
    std::string name;
    std::vector<Graph> graphs;
    std::string provenance;
};

/// True iff g contains none of the catalog members as a minor.
bool avoids_all_minors(const Graph& g, const ObstructionSet& obstructions,
                       uint64_t budget = kDefaultMinorBudget);

/// Projective planarity against the nonprojective-planar obstruction catalog.
bool is_projective_planar(const Graph& g, const ObstructionSet& obstructions,
                          uint64_t budget = kDefaultMinorBudget);

}  // namespace projlink
