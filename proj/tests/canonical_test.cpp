#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "projlink/canonical.hpp"
#include "projlink/graph.hpp"

using namespace projlink;

namespace {

// Brute-force isomorphism over all vertex permutations; independent of the
// canonical-form implementation.
bool brute_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<Graph> all_labeled_graphs(int n) {
    int pairs = n * (n - 1) / 2;
    std::vector<Edge> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < pairs; ++i)
            if ((mask >> i) & 1u) es.push_back(all_edges[i]);
        out.emplace_back(n, es);
    }
    return out;
}

}  // namespace

TEST_CASE("cyclic relabeling of C5 keeps the code") {
    Graph c5 = cycle_graph(5);
    Graph shifted = relabel(c5, {1, 2, 3, 4, 0});
    CHECK(canonical_form(c5) == canonical_form(shifted));
}

TEST_CASE("different graphs get different codes") {
    CHECK(canonical_form(complete_bipartite(3, 3)) !=
          canonical_form(disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(is_isomorphic(complete_graph(3), cycle_graph(3)));
    CHECK_FALSE(is_isomorphic(path_graph(4), complete_bipartite(1, 3)));
}

TEST_CASE("K7 minus two adjacent vs nonadjacent edges are non-isomorphic") {
    Graph adj = complete_graph(7).delete_edge(0, 1).delete_edge(0, 2);
    Graph nonadj = complete_graph(7).delete_edge(0, 1).delete_edge(2, 3);
    CHECK_FALSE(is_isomorphic(adj, nonadj));
}

TEST_CASE("all 4-vertex graphs fall into 11 classes") {
    // Oracle: partition the 64 labeled graphs by brute-force isomorphism.
    auto graphs = all_labeled_graphs(4);
    std::vector<Graph> reps;
    for (const Graph& g : graphs) {
        bool found = false;
        for (const Graph& r : reps)
            if (brute_isomorphic(g, r)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(g);
    }
    REQUIRE(reps.size() == 11);
    std::set<CanonicalCode> codes;
    for (const Graph& g : graphs) codes.insert(canonical_form(g));
    CHECK(codes.size() == 11);
}

TEST_CASE("canonical equality agrees with brute-force isomorphism on 5 vertices") {
    auto graphs = all_labeled_graphs(5);
    // Group by code, then verify each group is one brute-force class and that
    // representatives of distinct codes are non-isomorphic.
    std::map<CanonicalCode, std::vector<const Graph*>> by_code;
    for (const Graph& g : graphs) by_code[canonical_form(g)].push_back(&g);
    CHECK(by_code.size() == 34);  // known number of 5-vertex graphs
    std::vector<const Graph*> reps;
    for (auto& [code, members] : by_code) {
        for (size_t i = 1; i < members.size(); ++i)
            REQUIRE(brute_isomorphic(*members[0], *members[i]));
        reps.push_back(members[0]);
    }
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            REQUIRE_FALSE(brute_isomorphic(*reps[i], *reps[j]));
}

TEST_CASE("canonical form handles symmetric graphs up to 13 vertices") {
    CHECK(canonical_form(complete_graph(13)).size() > 0);
    Graph k66 = complete_bipartite(6, 6);
    std::mt19937 rng(7);
    std::vector<int> perm(12);
    for (int i = 0; i < 12; ++i) perm[i] = i;
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(k66, perm)) == canonical_form(k66));
    }
    CHECK(canonical_form(k66) != canonical_form(complete_bipartite(5, 7)));
}

TEST_CASE("relabeling invariance on random graphs") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) es.emplace_back(u, v);
        Graph g(n, es);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }
}
