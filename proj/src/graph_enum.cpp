#include "projlink/graph_enum.hpp"

#include <deque>
#include <map>

#include "projlink/canonical.hpp"

namespace projlink {

std::vector<Graph> all_graphs(int n) {
    std::map<CanonicalCode, Graph> seen;
    std::deque<const Graph*> queue;
    Graph empty(n);
    auto [it, ok] = seen.emplace(canonical_form(empty), empty);
    queue.push_back(&it->second);
    while (!queue.empty()) {
        const Graph* cur = queue.front();
        queue.pop_front();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (cur->has_edge(u, v)) continue;
                Graph h = cur->add_edge(u, v);
                CanonicalCode code = canonical_form(h);
                auto [jt, inserted] = seen.emplace(code, std::move(h));
                if (inserted) queue.push_back(&jt->second);
            }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [code, g] : seen) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (g.is_connected()) out.push_back(std::move(g));
    return out;
}

}  // namespace projlink
