#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace projlink {

using Edge = std::pair<int, int>;  // always stored with first < second

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on vertices 0..n-1, adjacency kept as bitmasks.
/// Immutable in spirit: every operation returns a new graph.
class Graph {
public:
    static constexpr int kMaxVertices = 31;

    Graph() = default;
    explicit Graph(int n, std::string name = {});
    Graph(int n, const std::vector<Edge>& edges, std::string name = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (adj_[u] >> v) & 1u;
    }
    uint32_t neighbors_mask(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const;  // lexicographic order
    std::vector<int> degree_sequence() const;  // sorted descending

    Graph add_edge(int u, int v) const;
    Graph delete_edge(int u, int v) const;
    Graph delete_vertex(int v) const;
    /// Merge the endpoints of {u,v} into one vertex (the smaller index),
    /// dropping the loop and collapsing parallels. |V| shrinks by one.
    Graph contract_edge(int u, int v) const;

    bool is_connected() const;
    /// Connected components as vertex bitmasks.
    std::vector<uint32_t> components() const;
    /// Vertices reachable from `start` staying inside `allowed`.
    uint32_t reach(int start, uint32_t allowed) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator<(const Graph& o) const {
        return n_ != o.n_ ? n_ < o.n_ : adj_ < o.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<uint32_t> adj_;
    std::string name_;
};

// Small standard graphs used throughout.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph wheel_graph(int rim);  // rim >= 3, hub is vertex 0
Graph petersen_graph();
Graph k44_minus_e();
/// Disjoint union (no cross edges).
Graph disjoint_union(const Graph& a, const Graph& b);

// Edge-list text format (".el"): '#' comments, first data line is the vertex
// count, then one "u v" pair per line with u < v.
Graph read_edge_list(std::istream& in, const std::string& name = {});
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace projlink
