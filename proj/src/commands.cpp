#include "projlink/commands.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "projlink/canonical.hpp"
#include "projlink/embedding.hpp"
#include "projlink/graph.hpp"
#include "projlink/link_conditions.hpp"
#include "projlink/transforms.hpp"

namespace projlink {

namespace {

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string edge_list_str(const std::vector<Edge>& edges) {
    if (edges.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ";";
        os << "(" << edges[i].first << "," << edges[i].second << ")";
    }
    return os.str();
}

std::string untabbed(std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    return s;
}

std::string branch_sets_str(const MinorCertificate& cert) {
    std::ostringstream os;
    for (size_t k = 0; k < cert.branch_sets.size(); ++k) {
        if (k) os << " ";
        os << "{";
        bool first = true;
        for (int v = 0; v < 32; ++v) {
            if (!((cert.branch_sets[k] >> v) & 1u)) continue;
            if (!first) os << ",";
            os << v;
            first = false;
        }
        os << "}";
    }
    return os.str();
}

Graph load_subject(const std::string& path) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".emb") == 0) {
        Rp2Embedding emb = read_embedding_file(path);
        validate_structure(emb);
        return emb.graph;
    }
    return read_edge_list_file(path);
}

/// Runs f(0..n-1) on `workers` threads; rethrows the first failure.
template <typename F>
void parallel_for(int n, int workers, F f) {
    workers = std::max(1, std::min(workers, n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

void print_report(const Report& r, std::ostream& tsv, std::ostream& log) {
    tsv << "# command\t" << r.command << "\n";
    tsv << "# version\t" << kToolVersion << "\n";
    if (!r.catalog_digest.empty()) tsv << "# catalog-digest\t" << r.catalog_digest << "\n";
    if (!r.header.empty()) tsv << r.header << "\n";
    for (const std::string& row : r.rows) tsv << row << "\n";
    log << r.verdict << ": " << r.command;
    if (!r.summary.empty()) log << " - " << r.summary;
    log << "\n";
}

Report cmd_verify_petersen_closure(const Catalog& cat) {
    Report rep;
    rep.command = "verify petersen-closure";
    rep.header = "member\tvertices\tedges\tbipartite\tprojective_planar\tembedding_oracle";
    rep.catalog_digest = cat.digest();

    ObstructionSet obs = cat.obstructions();
    std::vector<Graph> closure = dy_closure(complete_graph(6));

    int bipartite_15e = 0;
    int pp_count = 0;
    bool oracles_agree = true;
    for (size_t i = 0; i < closure.size(); ++i) {
        const Graph& g = closure[i];
        bool bip = is_bipartite(g);
        bool pp = is_projective_planar(g, obs);
        bool emb = embeds_in_rp2(g);
        if (pp != emb) oracles_agree = false;
        if (pp) ++pp_count;
        if (bip && g.vertex_count() == 8 && g.edge_count() == 15 &&
            is_isomorphic(g, k44_minus_e()))
            ++bipartite_15e;
        std::ostringstream row;
        row << "member-" << i << "\t" << g.vertex_count() << "\t" << g.edge_count() << "\t"
            << (bip ? "true" : "false") << "\t" << (pp ? "true" : "false") << "\t"
            << (emb ? "true" : "false");
        rep.rows.push_back(row.str());
    }

    // Exactly one member is bipartite (K4,4-e, 8 vertices / 15 edges); it is
    // the unique non-projective-planar member, so six of seven embed.
    bool ok = closure.size() == 7 && bipartite_15e == 1 && pp_count == 6 && oracles_agree;
    rep.verdict = ok ? "PASS" : "FAIL";
    std::ostringstream sum;
    sum << closure.size() << " classes, " << bipartite_15e << " bipartite(8v,15e), "
        << pp_count << " projective planar, oracles "
        << (oracles_agree ? "agree" : "disagree");
    rep.summary = sum.str();
    return rep;
}

Report cmd_verify_deltay_table(const Catalog& cat) {
    Report rep;
    rep.command = "verify deltay-table";
    rep.header = "case\tincident_vertices\torbit\ttriangle\tk44e_minor\texpected";
    rep.catalog_digest = cat.digest();

    Graph pattern = k44_minus_e();
    bool all_match = true;
    int case1_one_orbits = 0;

    for (int variant = 1; variant <= 2; ++variant) {
        // Case 1: the two removed edges share vertex 0. Case 2: disjoint.
        Graph g = complete_graph(7).delete_edge(0, 1);
        g = (variant == 1) ? g.delete_edge(0, 2) : g.delete_edge(2, 3);
        uint32_t touched = (variant == 1) ? 0b0000111u : 0b0001111u;

        // Group triangles into orbits by the canonical form of the exchanged
        // graph; this is exactly orbit equivalence under Aut(g).
        std::map<CanonicalCode, Triangle> orbits;
        for (const Triangle& t : triangles_of(g))
            orbits.emplace(canonical_form(delta_y(g, t)), t);

        std::map<int, int> orbit_index;
        for (const auto& [code, t] : orbits) {
            int incident = 0;
            for (int v : t.v)
                if ((touched >> v) & 1u) ++incident;
            // The table: the minor is absent for Case 1 / one incident vertex
            // and Case 2 / zero or two; present otherwise.
            bool expect_minor = (variant == 1) ? (incident != 1) : (incident == 1);
            bool minor = has_minor(delta_y(g, t), pattern).has_value();
            if (minor != expect_minor) all_match = false;
            if (variant == 1 && incident == 1) ++case1_one_orbits;
            int sub = orbit_index[incident]++;
            std::ostringstream row;
            row << "case-" << variant << "\t" << incident << "\t" << sub << "\t{" << t.v[0]
                << "," << t.v[1] << "," << t.v[2] << "}\t" << (minor ? "present" : "absent")
                << "\t" << (expect_minor ? "present" : "absent");
            rep.rows.push_back(row.str());
        }
    }

    // Case 1 / one incident vertex splits into two genuinely distinct orbits
    // (the shared vertex of the removed pair vs. an outer endpoint).
    bool ok = all_match && case1_one_orbits == 2;
    rep.verdict = ok ? "PASS" : "FAIL";
    rep.summary = all_match ? ("table reproduced; case-1/one has " +
                               std::to_string(case1_one_orbits) + " orbits")
                            : "minor pattern deviates from the expected table";
    return rep;
}

Report cmd_verify_c11(const Catalog& cat) {
    Report rep;
    rep.command = "verify c11";
    rep.header = "stage\tvertices\tedges\tprojective_planar";
    rep.catalog_digest = cat.digest();

    ObstructionSet obs = cat.obstructions();
    Graph before = cat.graph("c11");
    auto marked = cat.marked_y_vertex("c11");
    if (!marked) throw CatalogError("c11 entry lacks a y-delta-vertex mark");
    Graph after = y_delta(before, *marked);

    bool pp_before = is_projective_planar(before, obs);
    bool pp_after = is_projective_planar(after, obs);
    std::ostringstream r1, r2;
    r1 << "before\t" << before.vertex_count() << "\t" << before.edge_count() << "\t"
       << (pp_before ? "true" : "false");
    r2 << "after-y-delta(" << *marked << ")\t" << after.vertex_count() << "\t"
       << after.edge_count() << "\t" << (pp_after ? "true" : "false");
    rep.rows = {r1.str(), r2.str()};

    bool ok = !pp_before && pp_after;
    rep.verdict = ok ? "PASS" : "FAIL";
    rep.summary = ok ? "projective planarity gained by the marked Y-Delta exchange"
                     : "exchange did not change planarity as expected";
    return rep;
}

Report cmd_verify_archdeacon(const Catalog& cat) {
    Report rep;
    rep.command = "verify archdeacon";
    rep.header = "entry\tvertices\tedges\tk44e_minor_of_join";
    rep.catalog_digest = cat.digest();

    std::vector<std::string> names = cat.names_with_prefix("archdeacon-");
    if (names.empty()) {
        rep.verdict = "SKIP";
        rep.summary = "no archdeacon- entries in the catalog";
        return rep;
    }

    Graph pattern = k44_minus_e();
    bool all_found = true;
    for (const std::string& name : names) {
        Graph g = cat.graph(name);
        Graph joined = join(g, Graph(2));
        auto cert = has_minor(joined, pattern);
        bool found = cert.has_value() && verify_certificate(joined, pattern, *cert);
        if (!found) all_found = false;
        std::ostringstream row;
        row << name << "\t" << g.vertex_count() << "\t" << g.edge_count() << "\t"
            << (found ? "present" : "absent");
        rep.rows.push_back(row.str());
    }
    rep.verdict = all_found ? "PASS" : "FAIL";
    rep.summary = std::to_string(names.size()) + " entries checked";
    return rep;
}

Report cmd_search_16(const Catalog& cat, uint64_t budget, int workers) {
    Report rep;
    rep.command = "search sixteen";
    rep.header = "candidate\tvertices\tedges\torigin\tclassification";
    rep.catalog_digest = cat.digest();

    ObstructionSet obs = cat.obstructions();
    std::vector<Graph> family = petersen_family();

    // Collect one representative per isomorphism class across all members.
    struct Candidate {
        Graph g;
        std::string origin;
    };
    std::map<CanonicalCode, Candidate> dedup;
    for (size_t i = 0; i < family.size(); ++i) {
        for (const Graph& g : enumerate_edge_additions(family[i]))
            dedup.emplace(canonical_form(g),
                          Candidate{g, "member-" + std::to_string(i) + "+edge"});
        for (const Graph& g : enumerate_vertex_splits(family[i]))
            dedup.emplace(canonical_form(g),
                          Candidate{g, "member-" + std::to_string(i) + "+split"});
    }
    std::vector<std::pair<CanonicalCode, Candidate>> cands(dedup.begin(), dedup.end());

    Graph pattern = k44_minus_e();
    std::vector<std::string> cls(cands.size());
    parallel_for(static_cast<int>(cands.size()), workers, [&](int i) {
        const Graph& g = cands[i].second.g;
        try {
            if (is_projective_planar(g, obs, budget))
                cls[i] = "projective-planar";
            else if (has_minor(g, pattern, budget).has_value())
                cls[i] = "k44e-minor";
            else
                cls[i] = "EXCEPTION";
        } catch (const ResourceLimitError&) {
            throw ResourceLimitError("budget exhausted on candidate " +
                                     cands[i].second.origin + " #" + std::to_string(i));
        }
    });

    int exceptions = 0;
    for (size_t i = 0; i < cands.size(); ++i) {
        const Candidate& c = cands[i].second;
        if (cls[i] == "EXCEPTION") ++exceptions;
        std::ostringstream row;
        row << "candidate-" << i << "\t" << c.g.vertex_count() << "\t" << c.g.edge_count()
            << "\t" << c.origin << "\t" << cls[i];
        rep.rows.push_back(row.str());
    }

    rep.verdict = exceptions == 0 ? "PASS" : "FAIL";
    rep.summary = std::to_string(cands.size()) + " candidate classes, " +
                  std::to_string(exceptions) + " exceptions";
    return rep;
}

Report cmd_check(const Catalog& cat, const std::string& subject_path,
                 const std::string& query, const std::string& pattern_name) {
    Report rep;
    rep.command = "check " + query;
    rep.header = "subject\tquery\tresult\tdetail";
    Graph g = load_subject(subject_path);
    std::string name = std::filesystem::path(subject_path).stem().string();

    std::ostringstream row;
    row << name << "\t" << query << "\t";
    if (query == "planar") {
        row << (is_planar(g) ? "true" : "false") << "\t-";
    } else if (query == "outerplanar") {
        row << (is_outerplanar(g) ? "true" : "false") << "\t-";
    } else if (query == "projective-planar") {
        rep.catalog_digest = cat.digest();
        row << (is_projective_planar(g, cat.obstructions()) ? "true" : "false") << "\t-";
    } else if (query == "minor") {
        Graph pattern;
        if (pattern_name == "k4")
            pattern = complete_graph(4);
        else if (pattern_name == "k5")
            pattern = complete_graph(5);
        else if (pattern_name == "k6")
            pattern = complete_graph(6);
        else if (pattern_name == "k33")
            pattern = complete_bipartite(3, 3);
        else if (pattern_name == "k44-e")
            pattern = k44_minus_e();
        else if (pattern_name == "petersen")
            pattern = petersen_graph();
        else if (cat.has(pattern_name))
            pattern = cat.graph(pattern_name);
        else
            pattern = load_subject(pattern_name);
        auto cert = has_minor(g, pattern);
        row << (cert ? "present" : "absent") << "\t"
            << (cert ? branch_sets_str(*cert) : "-");
    } else {
        throw std::invalid_argument("unknown check query: " + query);
    }
    rep.rows.push_back(row.str());
    rep.verdict = "PASS";
    rep.summary = untabbed(rep.rows.back());
    return rep;
}

Report cmd_link_conditions(const std::string& drawing_path) {
    Report rep;
    rep.command = "link-conditions";
    rep.header = kReportTsvHeader;
    Rp2Embedding emb = read_embedding_file(drawing_path);
    if (!is_valid_embedding(emb))
        throw EmbeddingError(drawing_path + ": not a valid embedding");
    std::string name = std::filesystem::path(drawing_path).stem().string();
    LinkReport lr = link_report(emb);
    rep.rows.push_back(report_tsv_row(name, lr));
    rep.verdict = "PASS";
    rep.summary = untabbed(rep.rows.back());
    return rep;
}

Report cmd_embed_enumerate(const std::string& path, int max_results) {
    Report rep;
    rep.command = "embed enumerate";
    rep.header = "embedding\teuler\tfaces\tnegative_edges";
    Graph g = load_subject(path);
    std::vector<Rp2Embedding> embs =
        enumerate_rp2_embeddings(g, kDefaultEmbedBudget, false, max_results);
    for (size_t i = 0; i < embs.size(); ++i) {
        std::ostringstream row;
        row << "embedding-" << i << "\t" << euler_value(embs[i]) << "\t"
            << trace_faces(embs[i]).size() << "\t"
            << edge_list_str(one_homologous_edges(embs[i]));
        rep.rows.push_back(row.str());
    }
    rep.verdict = "PASS";
    rep.summary = std::to_string(embs.size()) + " embedding classes";
    return rep;
}

}  // namespace projlink
