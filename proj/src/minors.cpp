#include "projlink/minors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace projlink {

bool verify_certificate(const Graph& host, const Graph& pattern, const MinorCertificate& cert) {
    int pn = pattern.vertex_count();
    if (static_cast<int>(cert.branch_sets.size()) != pn) return false;
    uint32_t host_all = host.vertex_count() >= 31 ? 0x7fffffffu : (1u << host.vertex_count()) - 1u;
    uint32_t used = 0;
    for (uint32_t b : cert.branch_sets) {
        if (b == 0 || (b & ~host_all) != 0) return false;
        if (b & used) return false;  // overlap
        used |= b;
        int root = std::countr_zero(b);
        if (host.reach(root, b) != b) return false;  // not connected
    }
    for (auto [a, b] : pattern.edges()) {
        uint32_t ma = cert.branch_sets[a], mb = cert.branch_sets[b];
        bool linked = false;
        uint32_t m = ma;
        while (m && !linked) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (host.neighbors_mask(v) & mb) linked = true;
        }
        if (!linked) return false;
    }
    return true;
}

namespace {

struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;           // pattern vertices, decreasing degree
    std::vector<uint32_t> assigned;   // by pattern vertex index
    uint64_t budget;
    uint64_t nodes = 0;

    MinorSearch(const Graph& h, const Graph& p, uint64_t b) : host(h), pattern(p), budget(b) {
        order.resize(p.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int c) { return p.degree(a) > p.degree(c); });
        assigned.assign(p.vertex_count(), 0);
    }

    void tick() {
        if (++nodes > budget) throw ResourceLimitError("minor search: node budget exceeded");
    }

    bool place(size_t idx, uint32_t used) {
        if (idx == order.size()) return true;
        int k = order[idx];
        // Enough host vertices left for the remaining pattern vertices?
        int free_count = host.vertex_count() - std::popcount(used);
        if (free_count < static_cast<int>(order.size() - idx)) return false;
        uint32_t host_all =
            host.vertex_count() >= 31 ? 0x7fffffffu : (1u << host.vertex_count()) - 1u;
        uint32_t free = host_all & ~used;
        // Grow branch sets rooted at their minimum vertex so each set is
        // enumerated exactly once.
        uint32_t roots = free;
        while (roots) {
            int r = std::countr_zero(roots);
            roots &= roots - 1;
            uint32_t above = ~((1u << (r + 1)) - 1u);
            if (grow(idx, k, used, 1u << r, free & above & host.neighbors_mask(r), 0)) return true;
        }
        return false;
    }

    bool adjacency_ok(int k, uint32_t bset) {
        for (int j : pattern.neighbors(k)) {
            if (assigned[j] == 0) continue;  // not placed yet
            uint32_t other = assigned[j];
            bool linked = false;
            uint32_t m = bset;
            while (m && !linked) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (host.neighbors_mask(v) & other) linked = true;
            }
            if (!linked) return false;
        }
        return true;
    }

    // bset is connected (rooted at its minimum vertex); ext holds candidate
    // extension vertices not yet considered; banned holds siblings already
    // explored at shallower positions, so every connected set is reached once.
    bool grow(size_t idx, int k, uint32_t used, uint32_t bset, uint32_t ext, uint32_t banned) {
        tick();
        if (adjacency_ok(k, bset)) {
            assigned[k] = bset;
            if (place(idx + 1, used | bset)) return true;
            assigned[k] = 0;
        }
        // Leave at least one host vertex per unplaced pattern vertex.
        int free_after = host.vertex_count() - std::popcount(used) - std::popcount(bset);
        if (free_after <= static_cast<int>(order.size() - idx - 1)) return false;
        uint32_t host_all =
            host.vertex_count() >= 31 ? 0x7fffffffu : (1u << host.vertex_count()) - 1u;
        int root = std::countr_zero(bset);
        uint32_t above = ~((1u << (root + 1)) - 1u);
        uint32_t free = host_all & ~used & ~bset & above;
        uint32_t cand = ext;
        while (cand) {
            int c = std::countr_zero(cand);
            cand &= cand - 1;
            uint32_t add = host.neighbors_mask(c) & free & ~banned & ~ext;
            if (grow(idx, k, used, bset | (1u << c), (cand | add) & ~(1u << c), banned))
                return true;
            banned |= 1u << c;
        }
        return false;
    }
};

}  // namespace

std::optional<MinorCertificate> has_minor(const Graph& host, const Graph& pattern,
                                          uint64_t budget) {
    if (pattern.vertex_count() == 0) return MinorCertificate{};
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;
    MinorSearch s(host, pattern, budget);
    if (!s.place(0, 0)) return std::nullopt;
    MinorCertificate cert{s.assigned};
    return cert;
}

namespace {
const Graph& k5() {
    static const Graph g = complete_graph(5);
    return g;
}
const Graph& k33() {
    static const Graph g = complete_bipartite(3, 3);
    return g;
}
}  // namespace

bool is_planar(const Graph& g) {
    if (g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6) return false;
    return !has_minor(g, k5()) && !has_minor(g, k33());
}

bool is_outerplanar(const Graph& g) {
    if (g.vertex_count() >= 2 && g.edge_count() > 2 * g.vertex_count() - 3) return false;
    static const Graph k4 = complete_graph(4);
    static const Graph k23 = complete_bipartite(2, 3);
    return !has_minor(g, k4) && !has_minor(g, k23);
}

bool avoids_all_minors(const Graph& g, const ObstructionSet& obstructions, uint64_t budget) {
    for (const Graph& obs : obstructions.graphs)
        if (has_minor(g, obs, budget)) return false;
    return true;
}

bool is_projective_planar(const Graph& g, const ObstructionSet& obstructions, uint64_t budget) {
    return avoids_all_minors(g, obstructions, budget);
}

}  // namespace projlink
