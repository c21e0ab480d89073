#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projlink/graph.hpp"

namespace projlink {

/// Byte string identifying an isomorphism class: two graphs get the same code
/// iff they are isomorphic.
using CanonicalCode = std::string;

/// Canonical form by equitable-partition refinement plus backtracking over the
/// refined cells, with orbit pruning from discovered automorphisms.
CanonicalCode canonical_form(const Graph& g);

/// The relabeling that realizes the canonical form: canonical label of vertex v
/// is perm[v].
std::vector<int> canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Apply a relabeling: vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace projlink
