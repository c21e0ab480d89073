#include "projlink/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace projlink {

Graph::Graph(int n, std::string name) : n_(n), adj_(n, 0u), name_(std::move(name)) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::string name)
    : Graph(n, std::move(name)) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge");
        if (!((adj_[u] >> v) & 1u)) {
            adj_[u] |= 1u << v;
            adj_[v] |= 1u << u;
            ++m_;
        }
    }
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    uint32_t m = neighbors_mask(v);
    while (m) {
        int w = std::countr_zero(m);
        out.push_back(w);
        m &= m - 1;
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[u] >> v) & 1u) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

Graph Graph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge");
    Graph g = *this;
    if (!g.has_edge(u, v)) {
        g.adj_[u] |= 1u << v;
        g.adj_[v] |= 1u << u;
        ++g.m_;
    }
    return g;
}

Graph Graph::delete_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph g = *this;
    g.adj_[u] &= ~(1u << v);
    g.adj_[v] &= ~(1u << u);
    --g.m_;
    return g;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    Graph g(n_ - 1, name_);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        int uu = u < v ? u : u - 1;
        for (int w = u + 1; w < n_; ++w) {
            if (w == v || !((adj_[u] >> w) & 1u)) continue;
            int ww = w < v ? w : w - 1;
            g.adj_[uu] |= 1u << ww;
            g.adj_[ww] |= 1u << uu;
            ++g.m_;
        }
    }
    return g;
}

Graph Graph::contract_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    int keep = std::min(u, v), gone = std::max(u, v);
    // Fold gone's neighbors into keep, then drop gone.
    std::vector<Edge> es;
    for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
            if (!((adj_[a] >> b) & 1u)) continue;
            int x = a == gone ? keep : a;
            int y = b == gone ? keep : b;
            if (x == y) continue;  // the contracted edge itself
            auto fix = [&](int z) { return z > gone ? z - 1 : z; };
            es.push_back(make_edge(fix(x), fix(y)));
        }
    }
    return Graph(n_ - 1, es, name_);
}

uint32_t Graph::reach(int start, uint32_t allowed) const {
    check_vertex(start);
    if (!((allowed >> start) & 1u)) return 0;
    uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
        uint32_t next = 0;
        uint32_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj_[v] & allowed;
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

std::vector<uint32_t> Graph::components() const {
    std::vector<uint32_t> comps;
    uint32_t all = n_ == 31 ? 0x7fffffffu : (1u << n_) - 1u;
    uint32_t left = all;
    while (left) {
        int v = std::countr_zero(left);
        uint32_t c = reach(v, all);
        comps.push_back(c);
        left &= ~c;
    }
    return comps;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph complete_graph(int n) {
    Graph g(n, "K" + std::to_string(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g = g.add_edge(u, v);
    g.set_name("K" + std::to_string(n));
    return g;
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph(a + b, es, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i));
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, es, "C" + std::to_string(n));
}

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es, "P" + std::to_string(n));
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel needs rim >= 3");
    std::vector<Edge> es;
    for (int i = 1; i <= rim; ++i) {
        es.emplace_back(0, i);
        es.push_back(make_edge(i, i % rim + 1));
    }
    return Graph(rim + 1, es, "W" + std::to_string(rim));
}

Graph petersen_graph() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(make_edge(i, (i + 1) % 5));       // outer C5
        es.emplace_back(i, 5 + i);                     // spokes
        es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    }
    return Graph(10, es, "P10");
}

Graph k44_minus_e() {
    Graph g = complete_bipartite(4, 4).delete_edge(0, 4);
    g.set_name("K4,4-e");
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(a.vertex_count() + u, a.vertex_count() + v);
    return Graph(a.vertex_count() + b.vertex_count(), es);
}

Graph read_edge_list(std::istream& in, const std::string& name) {
    std::string line;
    int n = -1;
    std::vector<Edge> es;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) continue;
            continue;  // blank/comment before header
        }
        int u, v;
        if (ls >> u >> v) {
            if (!(0 <= u && u < v && v < n))
                throw std::runtime_error("edge list: bad edge '" + line + "'");
            es.emplace_back(u, v);
        }
    }
    if (n < 0) throw std::runtime_error("edge list: missing vertex count");
    return Graph(n, es, name);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    if (!g.name().empty()) out << "# " << g.name() << "\n";
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace projlink
