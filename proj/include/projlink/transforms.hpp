#pragma once

#include <array>
#include <vector>

#include "projlink/canonical.hpp"
#include "projlink/graph.hpp"

namespace projlink {

/// Three pairwise-adjacent vertices.
struct Triangle {
    std::array<int, 3> v;
};

std::vector<Triangle> triangles_of(const Graph& g);

/// Replace a triangle by a new degree-3 vertex joined to its corners.
/// |V| grows by one, |E| stays the same.
Graph delta_y(const Graph& g, const Triangle& t);

/// Replace a degree-3 vertex by a triangle on its neighbors. Edges already
/// present collapse silently, so |E| may drop.
Graph y_delta(const Graph& g, int v);

/// Closure of a graph under both exchange directions, one representative per
/// isomorphism class, sorted by canonical code.
std::vector<Graph> dy_closure(const Graph& g, size_t max_classes = 10000);

/// One representative per isomorphism class of G plus a single non-edge.
std::vector<Graph> enumerate_edge_additions(const Graph& g);

/// One representative per isomorphism class of splitting one vertex into two
/// adjacent vertices, each side keeping >= 1 of the old incident edges.
/// Every output has |V|+1 vertices and |E|+1 edges.
std::vector<Graph> enumerate_vertex_splits(const Graph& g);

/// A single split: neighbors in `moved_mask` go to the new vertex (index n),
/// the rest stay with v; v and the new vertex become adjacent.
Graph split_vertex(const Graph& g, int v, uint32_t moved_mask);

/// Disjoint union plus all cross edges.
Graph join(const Graph& g, const Graph& h);

/// The seven Delta-Y relatives of K6, sorted by canonical code.
std::vector<Graph> petersen_family();

}  // namespace projlink
