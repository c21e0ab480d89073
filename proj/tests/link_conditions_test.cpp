#include "doctest.h"

#include <algorithm>
#include <set>

#include "projlink/embedding.hpp"
#include "projlink/graph.hpp"
#include "projlink/graph_enum.hpp"
#include "projlink/link_conditions.hpp"
#include "projlink/minors.hpp"

using namespace projlink;

namespace {

// Independent formulation of the pairwise-sharing condition.
bool pairwise_share(const std::vector<Edge>& es) {
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            const Edge &e = es[i], &f = es[j];
            if (e.first != f.first && e.first != f.second && e.second != f.first &&
                e.second != f.second)
                return false;
        }
    return true;
}

Rp2Embedding cycle_drawing(int n, const std::set<Edge>& neg = {}) {
    Rp2Embedding emb;
    emb.graph = cycle_graph(n);
    for (int v = 0; v < n; ++v) emb.rotation.push_back(emb.graph.neighbors(v));
    emb.negative_edges = neg;
    REQUIRE(is_valid_embedding(emb));
    return emb;
}

// Every drawing of g: one enumerated representative per class, expanded by all
// vertex switchings (distinct fixed drawings within each class).
std::vector<Rp2Embedding> all_drawings(const Graph& g) {
    std::set<Rp2Embedding> seen;
    int n = g.vertex_count();
    for (const Rp2Embedding& base : enumerate_rp2_embeddings(g))
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            Rp2Embedding cur = base;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u) cur = switch_vertex(cur, v);
            seen.insert(cur);
        }
    return {seen.begin(), seen.end()};
}

// square 0-1-2-3 with one apex on vertices {0,2} and another on {1,3}; some
// planar drawing puts one apex inside the square and one outside
// Figure hypothesis: every negative edge genuinely crosses the crosscap,
// i.e. lies on at least one 1-homologous cycle. A "negative" bridge (or a
// sign pattern that switches away) is not a 1-homologous edge of the drawing.
bool negatives_essential(const Rp2Embedding& e) {
    std::vector<Edge> neg = one_homologous_edges(e);
    if (neg.empty()) return true;
    std::vector<EmbCycle> cycles = enumerate_simple_cycles(e.graph);
    for (const Edge& ed : neg) {
        bool on = false;
        for (const EmbCycle& c : cycles) {
            if (cycle_homology(e, c) != 1) continue;
            for (size_t i = 0; i < c.size() && !on; ++i)
                if (make_edge(c[i], c[(i + 1) % c.size()]) == ed) on = true;
            if (on) break;
        }
        if (!on) return false;
    }
    return true;
}

// Figure hypothesis: deleting an edge group must not strand vertices —
// the reduction stays connected apart from (at most) an isolated `hub`.
bool reduction_connected(const Rp2Embedding& e, const std::vector<Edge>& group,
                         int hub) {
    Graph r = e.graph;
    for (const Edge& ed : group) r = r.delete_edge(ed.first, ed.second);
    int big = 0;
    for (uint32_t comp : r.components()) {
        int sz = 0;
        for (uint32_t m = comp; m; m &= m - 1) ++sz;
        if (sz > 1)
            ++big;
        else if (hub < 0 || !((comp >> hub) & 1u))
            return false;  // stray isolated vertex
    }
    return big <= 1;
}

Graph apex_square() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 4}, {1, 5}, {3, 5}});
}

Graph prism_graph() {
    Graph g(6);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                        {0, 3}, {1, 4}, {2, 5}})
        g = g.add_edge(a, b);
    return g;
}

Graph elongated_prism(int path_len) {
    // two triangles {0,1,2} and {3,4,5}, three equal paths of `path_len` edges
    Graph g(6 + 3 * (path_len - 1));
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})
        g = g.add_edge(a, b);
    int next = 6;
    for (int i = 0; i < 3; ++i) {
        int cur = i;
        for (int k = 1; k < path_len; ++k) {
            g = g.add_edge(cur, next);
            cur = next++;
        }
        g = g.add_edge(cur, i + 3);
    }
    return g;
}

}  // namespace

TEST_CASE("delete_edges restricts graph, rotations, and signature") {
    Rp2Embedding k4;
    k4.graph = complete_graph(4);
    k4.rotation = {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}};
    REQUIRE(is_valid_embedding(k4));

    Rp2Embedding neg = k4;
    neg.negative_edges = {make_edge(0, 1), make_edge(2, 3)};
    Rp2Embedding cut = delete_edges(neg, {make_edge(0, 1)});
    CHECK(cut.graph.edge_count() == 5);
    CHECK(!cut.graph.has_edge(0, 1));
    CHECK(cut.rotation[0] == std::vector<int>{2, 3});
    CHECK(cut.rotation[1] == std::vector<int>{2, 3});
    CHECK(cut.negative_edges == std::set<Edge>{make_edge(2, 3)});
    CHECK_NOTHROW(validate_structure(cut));

    // deleting nothing is the identity
    CHECK(delete_edges(neg, {}) == neg);
}

TEST_CASE("no_link_00: outerplanar and wheel drawings are clean") {
    CHECK(no_link_00(cycle_drawing(6)).first);

    // some planar drawing of the 5-spoke wheel is nonseparating
    bool found = false;
    for (const Rp2Embedding& e : enumerate_rp2_embeddings(wheel_graph(5)))
        if (euler_value(e) == 2 && no_link_00(e).first) found = true;
    CHECK(found);
}

TEST_CASE("no_link_00: separating 4-cycle drawing fails with a verifiable witness") {
    Graph g = apex_square();
    bool found = false;
    for (const Rp2Embedding& e : enumerate_rp2_embeddings(g)) {
        auto [ok, witness] = no_link_00(e);
        if (ok) continue;
        found = true;
        REQUIRE(witness.has_value());
        CHECK(cycle_homology(e, *witness) == 0);
        CHECK(is_separating_cycle_0(e, *witness));
        auto [sa, sb] = disk_sides(e, *witness);
        CHECK(!sa.empty());
        CHECK(!sb.empty());
    }
    CHECK(found);
}

TEST_CASE("no_link_01: trivial cases and the precondition guard") {
    // all-positive drawing: no 1-homologous cycles at all
    CHECK(no_link_01(cycle_drawing(6)).first);

    // one negative edge on a spanning cycle: the only cycle is 1-homologous
    // and passes through every vertex, leaving nothing to separate
    Rp2Embedding loop = cycle_drawing(5, {make_edge(0, 4)});
    CHECK(euler_value(loop) == 1);
    CHECK(no_link_01(loop).first);

    // a separating drawing violates the hypothesis
    for (const Rp2Embedding& e : enumerate_rp2_embeddings(apex_square()))
        if (!no_link_00(e).first) {
            CHECK_THROWS_AS(no_link_01(e), LinkPreconditionError);
            break;
        }
}

TEST_CASE("no_link_01: drawing with separating 1-homologous cycle fails") {
    // essential triangle 0-1-2 with pendants 3 and 4 attached to vertex 0 on
    // opposite boundary copies: the only cycle is 1-homologous and separates
    // 3 from 4, while no 0-homologous cycle exists at all
    Rp2Embedding e;
    e.graph = Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}});
    e.rotation = {{1, 3, 2, 4}, {0, 2}, {0, 1}, {0}, {0}};
    e.negative_edges = {make_edge(0, 3), make_edge(0, 4), make_edge(1, 2)};
    REQUIRE(is_valid_embedding(e));
    REQUIRE(no_link_00(e).first);

    auto [ok, witness] = no_link_01(e);
    CHECK(!ok);
    REQUIRE(witness.has_value());
    CHECK(cycle_homology(e, *witness) == 1);
    auto [sa, sb] = sides_of_1hom_cycle(e, *witness);
    CHECK(!sa.empty());
    CHECK(!sb.empty());

    // agreement with the raw predicate across a whole drawing corpus
    for (const Rp2Embedding& d : all_drawings(complete_bipartite(2, 4))) {
        if (!no_link_00(d).first) continue;
        CHECK(no_link_01(d).first == !has_separating_1hom_cycle(d));
    }
}

TEST_CASE("classify_case on fixed sign patterns") {
    Rp2Embedding w = cycle_drawing(6);
    CHECK(classify_case(w) == CaseClass{CaseKind::Star, 0});

    Rp2Embedding star;
    star.graph = wheel_graph(5);
    for (int v = 0; v < 6; ++v) star.rotation.push_back(star.graph.neighbors(v));
    star.negative_edges = {make_edge(0, 1), make_edge(0, 2), make_edge(0, 5)};
    CHECK(classify_case(star) == CaseClass{CaseKind::Star, 0});

    Rp2Embedding tri = star;
    tri.negative_edges = {make_edge(1, 2), make_edge(2, 3), make_edge(1, 3)};
    CHECK(classify_case(tri) == CaseClass{CaseKind::Triangle, 1, 2, 3});

    Rp2Embedding nei = star;
    nei.negative_edges = {make_edge(0, 1), make_edge(2, 3)};
    CHECK(classify_case(nei).kind == CaseKind::Neither);
    auto [ok, pair] = no_link_11(nei);
    CHECK(!ok);
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].first != pair[1].first);
    CHECK(pair[0].first != pair[1].second);
    CHECK(pair[0].second != pair[1].first);
    CHECK(pair[0].second != pair[1].second);
}

TEST_CASE("case reductions reject the wrong shape") {
    Rp2Embedding star = cycle_drawing(6, {make_edge(0, 1), make_edge(0, 5)});
    CHECK(classify_case(star).kind == CaseKind::Star);
    CHECK_THROWS_AS(case2_no_link_00(star), LinkPreconditionError);

    Rp2Embedding tri;
    tri.graph = complete_graph(4);
    tri.rotation = {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}};
    tri.negative_edges = {make_edge(0, 1), make_edge(1, 2), make_edge(0, 2)};
    CHECK(classify_case(tri).kind == CaseKind::Triangle);
    CHECK_THROWS_AS(case1_no_link_00(tri), LinkPreconditionError);
}

TEST_CASE("case1 with empty negative set reduces against the drawing itself") {
    Rp2Embedding c6 = cycle_drawing(6);
    CHECK(case1_no_link_00(c6) == no_link_00(c6).first);
}

TEST_CASE("theorem equivalences over every drawing of small connected graphs") {
    int stars = 0, triangles = 0, neithers = 0;
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : all_connected_graphs(n))
            for (const Rp2Embedding& e : all_drawings(g)) {
                CaseClass cc = classify_case(e);
                auto [ok11, w11] = no_link_11(e);
                std::vector<Edge> neg = one_homologous_edges(e);

                // two formulations of the pairwise-sharing theorem agree
                CHECK(ok11 == pairwise_share(neg));
                CHECK(ok11 == (cc.kind != CaseKind::Neither));
                if (!ok11) {
                    REQUIRE(w11.size() == 2);
                    CHECK(!pairwise_share(w11));
                    for (const Edge& we : w11)
                        CHECK(std::count(neg.begin(), neg.end(), we) == 1);
                }
                // no 4-edge triangles: >= 4 pairwise-sharing edges share a hub
                if (ok11 && neg.size() >= 4) CHECK(cc.kind == CaseKind::Star);

                auto [ok00, w00] = no_link_00(e);
                CHECK(ok00 == is_nonseparating_embedding(e));
                if (!ok00) {
                    REQUIRE(w00.has_value());
                    CHECK(cycle_homology(e, *w00) == 0);
                    CHECK(is_separating_cycle_0(e, *w00));
                }

                // Case theorems restate no_link_00 through reduced drawings.
                // They hold under the figure hypotheses: negatives genuinely
                // 1-homologous and reductions not stranding vertices (a
                // stranded vertex floats freely in the reduced drawing and
                // loses the separation information).
                if (cc.kind == CaseKind::Star) {
                    std::vector<Edge> v0e, v1e;
                    for (int w : e.graph.neighbors(cc.v0)) {
                        Edge ed = make_edge(cc.v0, w);
                        (e.negative_edges.count(ed) ? v1e : v0e).push_back(ed);
                    }
                    if (negatives_essential(e) &&
                        reduction_connected(e, v0e, cc.v0) &&
                        reduction_connected(e, v1e, cc.v0)) {
                        ++stars;
                        CHECK(case1_no_link_00(e) == ok00);
                    }
                } else if (cc.kind == CaseKind::Triangle) {
                    bool conn = negatives_essential(e);
                    for (const Edge& ed : neg)
                        if (conn) conn = reduction_connected(e, {ed}, -1);
                    if (conn) {
                        ++triangles;
                        CHECK(case2_no_link_00(e) == ok00);
                    }
                } else {
                    ++neithers;
                }
            }
    // the corpus genuinely exercises all three shapes
    CHECK(stars > 0);
    CHECK(triangles > 0);
    CHECK(neithers > 0);
}

TEST_CASE("drawings passing every link condition have planar graphs") {
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : all_connected_graphs(n))
            for (const Rp2Embedding& e : all_drawings(g)) {
                auto [ok00, w00] = no_link_00(e);
                if (!ok00 || !no_link_11(e).first) continue;
                if (!no_link_01(e).first) continue;
                CHECK(is_planar(g));
            }
}

TEST_CASE("nonseparating planar classes are recognized structurally") {
    CHECK(nonseparating_planar_class(cycle_graph(7)) == PlanarClass::Outerplanar);
    CHECK(nonseparating_planar_class(path_graph(5)) == PlanarClass::Outerplanar);
    CHECK(nonseparating_planar_class(wheel_graph(6)) == PlanarClass::Wheel);
    CHECK(nonseparating_planar_class(wheel_graph(3)) == PlanarClass::Wheel);  // = K4
    CHECK(nonseparating_planar_class(prism_graph()) ==
          PlanarClass::ElongatedTriangularPrism);
    CHECK(nonseparating_planar_class(elongated_prism(2)) ==
          PlanarClass::ElongatedTriangularPrism);
    CHECK(nonseparating_planar_class(elongated_prism(3)) ==
          PlanarClass::ElongatedTriangularPrism);
    // the wheel family is subgraph-closed: K2,3 sits inside the 4-spoke wheel
    // (hub + rim alternating between the two parts)
    CHECK(nonseparating_planar_class(complete_bipartite(2, 3)) == PlanarClass::Wheel);

    // K4 plus a pendant vertex is in none of the families
    Graph k4p(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
    CHECK(nonseparating_planar_class(k4p) == PlanarClass::None);

    // unequal path lengths break the prism pattern
    Graph bad(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                  {0, 6}, {6, 3}, {1, 4}, {2, 5}});
    CHECK(nonseparating_planar_class(bad) == PlanarClass::None);

    CHECK_THROWS_AS(nonseparating_planar_class(complete_graph(5)),
                    std::invalid_argument);
}

TEST_CASE("graphs with a nonseparating planar drawing fall in the three classes") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : all_connected_graphs(n)) {
            if (!is_planar(g)) continue;
            bool has_ns_planar = false;
            for (const Rp2Embedding& e : enumerate_rp2_embeddings(g))
                if (euler_value(e) == 2 && is_nonseparating_embedding(e)) {
                    has_ns_planar = true;
                    break;
                }
            if (has_ns_planar)
                CHECK(nonseparating_planar_class(g) != PlanarClass::None);
        }
}

TEST_CASE("link_report assembly and TSV rows") {
    Rp2Embedding c6 = cycle_drawing(6);
    LinkReport r = link_report(c6);
    CHECK(r.no_link_00);
    REQUIRE(r.no_link_01.has_value());
    CHECK(*r.no_link_01);
    CHECK(r.no_link_11);
    CHECK(r.case_class == CaseClass{CaseKind::Star, 0});
    CHECK(report_tsv_row("c6", r) == "c6\ttrue\ttrue\ttrue\tStar(0)\t-");

    // signs {(0,1),(2,3)} on a square: faces unchanged, classification Neither
    Rp2Embedding nei = cycle_drawing(4, {make_edge(0, 1), make_edge(2, 3)});
    LinkReport rn = link_report(nei);
    CHECK(rn.no_link_00);
    REQUIRE(rn.no_link_01.has_value());
    CHECK(*rn.no_link_01);
    CHECK(!rn.no_link_11);
    CHECK(report_tsv_row("neither", rn) ==
          "neither\ttrue\ttrue\tfalse\tNeither\tedges:(0,1)+(2,3)");

    // separating drawing: 0/1 predicate not applicable
    for (const Rp2Embedding& e : enumerate_rp2_embeddings(apex_square())) {
        LinkReport rs = link_report(e);
        if (rs.no_link_00) continue;
        CHECK(!rs.no_link_01.has_value());
        std::string row = report_tsv_row("sep", rs);
        CHECK(row.find("\tn/a\t") != std::string::npos);
        CHECK(row.find("cycle:") != std::string::npos);
        break;
    }

    CHECK(std::string(kReportTsvHeader) ==
          "drawing\tno_link_00\tno_link_01\tno_link_11\tcase\twitness");
}
