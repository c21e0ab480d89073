#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "projlink/catalog.hpp"
#include "projlink/minors.hpp"

namespace projlink {

inline constexpr const char* kToolVersion = "projlink 1.0.0";

/// Deterministic result of one command run: a TSV table plus a verdict.
/// Byte-identical across runs and across worker counts.
struct Report {
    std::string command;
    std::string header;             // TSV header line, no trailing newline
    std::vector<std::string> rows;  // TSV body rows
    std::string verdict;            // "PASS", "FAIL", or "SKIP"
    std::string summary;            // one-line explanation of the verdict
    std::string catalog_digest;     // manifest digest the run used, "" if none

    /// 0 = PASS or SKIP, 1 = FAIL. (Errors surface as exceptions and map
    /// to exit code 2 in the CLI.)
    int exit_code() const { return verdict == "FAIL" ? 1 : 0; }
};

/// TSV (with leading "# ..." metadata comments) to `tsv`, verdict line to `log`.
void print_report(const Report& r, std::ostream& tsv, std::ostream& log);

/// The Delta-Y/Y-Delta closure of K6: exactly 7 isomorphism classes, exactly
/// one of them bipartite with 8 vertices and 15 edges (K4,4-e, the only
/// non-projective-planar member); projective planarity is decided twice, by
/// the obstruction catalog and by embedding search, and must agree.
Report cmd_verify_petersen_closure(const Catalog& cat);

/// The Delta-Y exchange table for both K7-2e variants (removed edges adjacent
/// = Case 1, disjoint = Case 2). Triangle orbits are grouped by the canonical
/// form of the exchanged graph; each orbit is tested for a K4,4-e minor.
/// PASS iff the minor is absent exactly for Case 1 / one incident vertex
/// (both orbits), Case 2 / zero, and Case 2 / two.
Report cmd_verify_deltay_table(const Catalog& cat);

/// The C11 regression: not projective planar before, projective planar after
/// the Y-Delta exchange at the vertex marked in the catalog entry.
Report cmd_verify_c11(const Catalog& cat);

/// Joins each "archdeacon-" catalog entry with two isolated vertices and
/// requires a K4,4-e minor. SKIPs when the catalog ships no such entries.
Report cmd_verify_archdeacon(const Catalog& cat);

/// The 16-edge sweep: every isomorphism class of (family member + one edge)
/// and (family member + one vertex split) over all seven closure members is
/// classified as projective planar or K4,4-e-minor-containing. PASS iff no
/// candidate escapes both buckets.
Report cmd_search_16(const Catalog& cat, uint64_t budget = kDefaultMinorBudget,
                     int workers = 1);

/// Predicate queries on a graph or drawing file: "planar", "outerplanar",
/// "projective-planar", or "minor" with a pattern (builtin name such as k5 /
/// k33 / k44-e / petersen, a catalog entry name, or a file path). Minor hits
/// print the certificate's branch sets.
Report cmd_check(const Catalog& cat, const std::string& subject_path,
                 const std::string& query, const std::string& pattern = "");

/// Link-freeness conditions of one ".emb" drawing as a LinkReport TSV row.
Report cmd_link_conditions(const std::string& drawing_path);

/// Enumerate inequivalent sphere/projective-plane embeddings of a graph file.
Report cmd_embed_enumerate(const std::string& path, int max_results = -1);

}  // namespace projlink
