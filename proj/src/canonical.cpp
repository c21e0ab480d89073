#include "projlink/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace projlink {
namespace {

using Partition = std::vector<std::vector<int>>;

// Split every cell by the count of neighbors in every cell, iterated to a
// fixpoint. Cell order is kept deterministic.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        Partition next;
        for (const auto& cell : p) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> by_sig;
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(p.size());
                for (const auto& other : p) {
                    int cnt = 0;
                    for (int w : other) cnt += g.has_edge(v, w) ? 1 : 0;
                    sig.push_back(cnt);
                }
                by_sig[sig].push_back(v);
            }
            if (by_sig.size() > 1) changed = true;
            for (auto& [sig, vs] : by_sig) next.push_back(vs);
        }
        p = std::move(next);
    }
}

struct Searcher {
    const Graph& g;
    int n;
    std::string best;                 // smallest certificate so far
    std::vector<int> best_perm;
    std::vector<std::vector<int>> leaf_perms;      // perm per distinct leaf of best cert
    std::vector<std::vector<int>> automorphisms;

    explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    std::string certificate(const std::vector<int>& label_of) const {
        // label_of[v] = canonical label of v
        std::vector<int> vert_at(n);
        for (int v = 0; v < n; ++v) vert_at[label_of[v]] = v;
        std::string cert;
        cert.push_back(static_cast<char>(n));
        uint8_t cur = 0;
        int bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                cur = static_cast<uint8_t>(cur << 1 | (g.has_edge(vert_at[i], vert_at[j]) ? 1 : 0));
                if (++bits == 8) {
                    cert.push_back(static_cast<char>(cur));
                    bits = 0;
                    cur = 0;
                }
            }
        if (bits) cert.push_back(static_cast<char>(cur << (8 - bits)));
        return cert;
    }

    // Is v in the same orbit as some already-processed sibling, under the
    // automorphisms that fix every vertex in `fixed`? Recomputed per sibling so
    // automorphisms discovered in earlier subtrees prune later ones.
    bool orbit_covered(int v, const std::vector<int>& processed, const std::vector<int>& fixed) {
        if (processed.empty()) return false;
        std::vector<int> rep(n);
        for (int i = 0; i < n; ++i) rep[i] = i;
        auto find = [&](int x) {
            while (rep[x] != x) x = rep[x] = rep[rep[x]];
            return x;
        };
        for (const auto& a : automorphisms) {
            bool ok = true;
            for (int f : fixed)
                if (a[f] != f) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int w = 0; w < n; ++w) {
                int x = find(w), y = find(a[w]);
                if (x != y) rep[std::max(x, y)] = std::min(x, y);
            }
        }
        for (int u : processed)
            if (find(u) == find(v)) return true;
        return false;
    }

    void search(Partition p, std::vector<int> fixed) {
        refine(g, p);
        // Find first smallest non-singleton cell.
        int target = -1;
        size_t target_size = static_cast<size_t>(n) + 1;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1 && p[i].size() < target_size) {
                target = static_cast<int>(i);
                target_size = p[i].size();
            }
        if (target < 0) {
            std::vector<int> label_of(n);
            for (size_t i = 0; i < p.size(); ++i) label_of[p[i][0]] = static_cast<int>(i);
            std::string cert = certificate(label_of);
            if (best.empty() || cert < best) {
                best = cert;
                best_perm = label_of;
                leaf_perms.clear();
                leaf_perms.push_back(label_of);
            } else if (cert == best) {
                // Same certificate from a different labeling: composition with
                // the stored labeling is an automorphism.
                for (const auto& other : leaf_perms) {
                    std::vector<int> inv(n);
                    for (int v = 0; v < n; ++v) inv[other[v]] = v;
                    std::vector<int> a(n);
                    for (int v = 0; v < n; ++v) a[v] = inv[label_of[v]];
                    automorphisms.push_back(a);
                }
                if (leaf_perms.size() < 8) leaf_perms.push_back(label_of);
            }
            return;
        }
        std::vector<int> processed;
        for (int v : p[target]) {
            if (orbit_covered(v, processed, fixed)) continue;
            processed.push_back(v);
            Partition child;
            for (size_t i = 0; i < p.size(); ++i) {
                if (static_cast<int>(i) == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int w : p[i])
                        if (w != v) rest.push_back(w);
                    child.push_back(rest);
                } else {
                    child.push_back(p[i]);
                }
            }
            auto f = fixed;
            f.push_back(v);
            search(std::move(child), std::move(f));
        }
    }
};

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::string(1, '\0');
    Searcher s(g);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    s.search(Partition{all}, {});
    return s.best;
}

std::vector<int> canonical_labeling(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {};
    Searcher s(g);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    s.search(Partition{all}, {});
    return s.best_perm;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.push_back(make_edge(perm[u], perm[v]));
    return Graph(g.vertex_count(), es, g.name());
}

}  // namespace projlink
