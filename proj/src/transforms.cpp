#include "projlink/transforms.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

namespace projlink {

std::vector<Triangle> triangles_of(const Graph& g) {
    std::vector<Triangle> out;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            uint32_t common = g.neighbors_mask(a) & g.neighbors_mask(b);
            common &= ~((1u << (b + 1)) - 1u);  // c > b avoids duplicates
            while (common) {
                int c = std::countr_zero(common);
                common &= common - 1;
                out.push_back({{a, b, c}});
            }
        }
    return out;
}

Graph delta_y(const Graph& g, const Triangle& t) {
    auto [a, b, c] = t.v;
    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c))
        throw std::invalid_argument("not a triangle");
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) {
        if ((u == std::min(a, b) && v == std::max(a, b)) ||
            (u == std::min(b, c) && v == std::max(b, c)) ||
            (u == std::min(a, c) && v == std::max(a, c)))
            continue;
        es.emplace_back(u, v);
    }
    int y = g.vertex_count();
    es.push_back(make_edge(a, y));
    es.push_back(make_edge(b, y));
    es.push_back(make_edge(c, y));
    return Graph(y + 1, es);
}

Graph y_delta(const Graph& g, int v) {
    if (g.degree(v) != 3) throw std::invalid_argument("vertex degree is not three");
    auto nb = g.neighbors(v);
    Graph h = g.add_edge(nb[0], nb[1]).add_edge(nb[0], nb[2]).add_edge(nb[1], nb[2]);
    return h.delete_vertex(v);
}

std::vector<Graph> dy_closure(const Graph& g, size_t max_classes) {
    std::map<CanonicalCode, Graph> seen;
    std::deque<Graph> queue;
    seen.emplace(canonical_form(g), g);
    queue.push_back(g);
    while (!queue.empty()) {
        Graph cur = std::move(queue.front());
        queue.pop_front();
        std::vector<Graph> next;
        for (const Triangle& t : triangles_of(cur)) next.push_back(delta_y(cur, t));
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (cur.degree(v) == 3) next.push_back(y_delta(cur, v));
        for (Graph& h : next) {
            CanonicalCode code = canonical_form(h);
            if (seen.count(code)) continue;
            if (seen.size() >= max_classes)
                throw std::runtime_error("dy_closure: class budget exceeded");
            seen.emplace(code, h);
            queue.push_back(std::move(h));
        }
    }
    std::vector<Graph> out;
    for (auto& [code, h] : seen) out.push_back(std::move(h));
    return out;  // map iteration = sorted by canonical code
}

std::vector<Graph> enumerate_edge_additions(const Graph& g) {
    std::map<CanonicalCode, Graph> seen;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Graph h = g.add_edge(u, v);
            seen.emplace(canonical_form(h), std::move(h));
        }
    std::vector<Graph> out;
    for (auto& [code, h] : seen) out.push_back(std::move(h));
    return out;
}

Graph split_vertex(const Graph& g, int v, uint32_t moved_mask) {
    uint32_t nbrs = g.neighbors_mask(v);
    if ((moved_mask & ~nbrs) != 0) throw std::invalid_argument("moved set not incident to v");
    std::vector<Edge> es;
    int fresh = g.vertex_count();
    for (auto [a, b] : g.edges()) {
        int u = a == v ? b : (b == v ? a : -1);
        if (u < 0) {
            es.emplace_back(a, b);
        } else if ((moved_mask >> u) & 1u) {
            es.push_back(make_edge(u, fresh));
        } else {
            es.emplace_back(a, b);
        }
    }
    es.push_back(make_edge(v, fresh));
    return Graph(fresh + 1, es);
}

std::vector<Graph> enumerate_vertex_splits(const Graph& g) {
    std::map<CanonicalCode, Graph> seen;
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        uint32_t nbrs = g.neighbors_mask(v);
        int d = std::popcount(nbrs);
        if (d < 2) continue;
        int low = std::countr_zero(nbrs);
        // The kept side always contains the lowest-indexed incident edge, and
        // both sides stay nonempty; this kills double counting of unordered
        // partitions and the pendant-vertex splits.
        uint32_t rest = nbrs & ~(1u << low);
        std::vector<int> rest_v;
        for (uint32_t m = rest; m;) {
            rest_v.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        for (uint32_t pick = 1; pick < (1u << rest_v.size()); ++pick) {
            uint32_t moved = 0;
            for (size_t i = 0; i < rest_v.size(); ++i)
                if ((pick >> i) & 1u) moved |= 1u << rest_v[i];
            Graph h = split_vertex(g, v, moved);
            seen.emplace(canonical_form(h), std::move(h));
        }
    }
    std::vector<Graph> out;
    for (auto& [code, h] : seen) out.push_back(std::move(h));
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<Edge> es = g.edges();
    int off = g.vertex_count();
    for (auto [u, v] : h.edges()) es.emplace_back(off + u, off + v);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < h.vertex_count(); ++v) es.emplace_back(u, off + v);
    return Graph(off + h.vertex_count(), es);
}

std::vector<Graph> petersen_family() { return dy_closure(complete_graph(6)); }

}  // namespace projlink
