#pragma once

#include <vector>

#include "projlink/graph.hpp"

namespace projlink {

/// One representative per isomorphism class of all graphs on exactly n
/// vertices, grown by edge additions with canonical-form deduplication.
/// Feasible for n <= 8 (12346 classes at n = 8).
std::vector<Graph> all_graphs(int n);

std::vector<Graph> all_connected_graphs(int n);

}  // namespace projlink
