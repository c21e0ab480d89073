#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "projlink/embedding.hpp"
#include "projlink/graph.hpp"
#include "projlink/minors.hpp"

namespace projlink {

/// Missing directory, malformed manifest, unknown entry, or an entry whose
/// file does not match its declared vertex/edge counts.
class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ManifestRow {
    std::string name;
    std::string file;  // path relative to the catalog root
    int expected_vertices = 0;
    int expected_edges = 0;
    std::string provenance;
};

/// A directory of graph (".el") and drawing (".emb") files indexed by
/// "manifest.tsv" (columns: name, file, expected_vertices, expected_edges,
/// provenance). Loading validates every row: the file must parse, drawings
/// must be valid embeddings, and both must match the declared counts.
class Catalog {
public:
    static Catalog load(const std::string& root);

    const std::string& root() const { return root_; }
    const std::vector<ManifestRow>& rows() const { return rows_; }
    /// FNV-1a 64-bit digest of the raw manifest bytes, 16 hex digits.
    const std::string& digest() const { return digest_; }

    bool has(const std::string& name) const;
    const ManifestRow& row(const std::string& name) const;

    /// Underlying graph of an entry (either file kind).
    Graph graph(const std::string& name) const;
    /// Embedding of a ".emb" entry; throws CatalogError for graph entries.
    Rp2Embedding drawing(const std::string& name) const;

    /// Entry names starting with `prefix`, in manifest order.
    std::vector<std::string> names_with_prefix(const std::string& prefix) const;

    /// All "obstruction-"-prefixed entries bundled as a forbidden-minor set.
    ObstructionSet obstructions() const;

    /// Vertex recorded in the entry's file as a "# y-delta-vertex N" comment.
    std::optional<int> marked_y_vertex(const std::string& name) const;

private:
    std::string path_of(const ManifestRow& r) const;

    std::string root_;
    std::vector<ManifestRow> rows_;
    std::string digest_;
};

}  // namespace projlink
