#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "projlink/canonical.hpp"
#include "projlink/catalog.hpp"
#include "projlink/embedding.hpp"
#include "projlink/graph.hpp"
#include "projlink/minors.hpp"

using namespace projlink;
namespace fs = std::filesystem;

namespace {

std::string data_dir() {
    const char* p = std::getenv("PROJLINK_DATA");
    REQUIRE(p != nullptr);
    return p;
}

int min_degree(const Graph& g) {
    int d = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

/// Scratch catalog on disk for the error-path tests.
struct TempCatalog {
    fs::path root;
    explicit TempCatalog(const std::string& tag) {
        root = fs::temp_directory_path() / ("projlink-cat-" + tag);
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~TempCatalog() { fs::remove_all(root); }
    void write(const std::string& rel, const std::string& content) const {
        std::ofstream out(root / rel);
        out << content;
    }
};

const std::string kHeader = "name\tfile\texpected_vertices\texpected_edges\tprovenance\n";
const std::string kTriangleEl = "3\n0 1\n0 2\n1 2\n";

}  // namespace

TEST_CASE("shipped catalog loads and self-validates") {
    Catalog cat = Catalog::load(data_dir());
    CHECK(cat.digest().size() == 16);
    CHECK(cat.rows().size() >= 40);  // 35 obstructions + family + drawings
    CHECK(cat.has("c11"));
    CHECK(!cat.has("no-such-entry"));
    CHECK_THROWS_AS(cat.row("no-such-entry"), CatalogError);
    CHECK_THROWS_AS(cat.graph("no-such-entry"), CatalogError);
}

TEST_CASE("obstruction set: 35 members, K4,4-e included, shape sanity") {
    Catalog cat = Catalog::load(data_dir());
    ObstructionSet obs = cat.obstructions();
    CHECK(obs.graphs.size() == 35);
    CHECK(!obs.provenance.empty());

    int k44me_hits = 0;
    CanonicalCode k44me = canonical_form(k44_minus_e());
    std::set<CanonicalCode> codes;
    for (const Graph& g : obs.graphs) {
        codes.insert(canonical_form(g));
        if (canonical_form(g) == k44me) ++k44me_hits;
        // minor-minimal graphs never have removable low-degree vertices
        CHECK(min_degree(g) >= 3);
        CHECK(!is_planar(g));
    }
    CHECK(k44me_hits == 1);
    CHECK(codes.size() == 35);  // pairwise non-isomorphic
}

TEST_CASE("obstruction spot check: smallest members fail to embed, minimally") {
    Catalog cat = Catalog::load(data_dir());
    ObstructionSet obs = cat.obstructions();
    std::sort(obs.graphs.begin(), obs.graphs.end(), [](const Graph& a, const Graph& b) {
        return std::pair(a.vertex_count(), a.edge_count()) <
               std::pair(b.vertex_count(), b.edge_count());
    });
    for (size_t i = 0; i < 5; ++i) {
        const Graph& g = obs.graphs[i];
        CHECK(!embeds_in_rp2(g));
        for (const Edge& e : g.edges()) {
            CHECK(embeds_in_rp2(g.delete_edge(e.first, e.second)));
            CHECK(embeds_in_rp2(g.contract_edge(e.first, e.second)));
        }
    }
}

TEST_CASE("c11 entry carries the marked exchange vertex") {
    Catalog cat = Catalog::load(data_dir());
    Graph c11 = cat.graph("c11");
    CHECK(c11.vertex_count() == 11);
    CHECK(c11.edge_count() == 19);
    auto marked = cat.marked_y_vertex("c11");
    REQUIRE(marked.has_value());
    CHECK(*marked == 5);
    CHECK(c11.degree(*marked) == 3);
    CHECK(!cat.marked_y_vertex("obstruction-01").has_value());
}

TEST_CASE("family entries and drawings") {
    Catalog cat = Catalog::load(data_dir());
    CHECK(cat.names_with_prefix("petersen-").size() == 7);
    // exactly six family members have a drawing: one member has none
    CHECK(cat.names_with_prefix("drawing-petersen-").size() == 6);
    for (const std::string& name : cat.names_with_prefix("drawing-")) {
        Rp2Embedding e = cat.drawing(name);
        CHECK(is_valid_embedding(e));
        // graph() on a drawing entry returns the underlying graph
        CHECK(cat.graph(name) == e.graph);
    }
    // drawing() on a graph entry is a type error
    CHECK_THROWS_AS(cat.drawing("c11"), CatalogError);
}

TEST_CASE("manifest error paths") {
    SUBCASE("missing directory") {
        CHECK_THROWS_AS(Catalog::load("/nonexistent/projlink-data"), CatalogError);
    }
    SUBCASE("bad header") {
        TempCatalog t("badheader");
        t.write("manifest.tsv", "nombre\tfile\tx\ty\tz\n");
        CHECK_THROWS_AS(Catalog::load(t.root.string()), CatalogError);
    }
    SUBCASE("wrong column count") {
        TempCatalog t("columns");
        t.write("manifest.tsv", kHeader + "tri\ttri.el\t3\n");
        CHECK_THROWS_AS(Catalog::load(t.root.string()), CatalogError);
    }
    SUBCASE("count mismatch") {
        TempCatalog t("counts");
        t.write("tri.el", kTriangleEl);
        t.write("manifest.tsv", kHeader + "tri\ttri.el\t4\t3\ttest\n");
        CHECK_THROWS_AS(Catalog::load(t.root.string()), CatalogError);
    }
    SUBCASE("missing file") {
        TempCatalog t("nofile");
        t.write("manifest.tsv", kHeader + "tri\ttri.el\t3\t3\ttest\n");
        CHECK_THROWS_AS(Catalog::load(t.root.string()), CatalogError);
    }
    SUBCASE("duplicate name") {
        TempCatalog t("dup");
        t.write("tri.el", kTriangleEl);
        t.write("manifest.tsv",
                kHeader + "tri\ttri.el\t3\t3\ttest\ntri\ttri.el\t3\t3\ttest\n");
        CHECK_THROWS_AS(Catalog::load(t.root.string()), CatalogError);
    }
    SUBCASE("well-formed scratch catalog loads") {
        TempCatalog t("ok");
        t.write("tri.el", kTriangleEl);
        t.write("manifest.tsv", kHeader + "tri\ttri.el\t3\t3\ttest\n");
        Catalog cat = Catalog::load(t.root.string());
        CHECK(cat.rows().size() == 1);
        CHECK(cat.graph("tri") == complete_graph(3));
        CHECK_THROWS_AS(cat.obstructions(), CatalogError);
    }
}

TEST_CASE("digest tracks manifest content") {
    TempCatalog a("dig-a"), b("dig-b");
    a.write("tri.el", kTriangleEl);
    b.write("tri.el", kTriangleEl);
    a.write("manifest.tsv", kHeader + "tri\ttri.el\t3\t3\tsource-a\n");
    b.write("manifest.tsv", kHeader + "tri\ttri.el\t3\t3\tsource-b\n");
    Catalog ca = Catalog::load(a.root.string());
    Catalog cb = Catalog::load(b.root.string());
    CHECK(ca.digest() != cb.digest());
    CHECK(Catalog::load(a.root.string()).digest() == ca.digest());
}
