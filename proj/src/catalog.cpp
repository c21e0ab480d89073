#include "projlink/catalog.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace projlink {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
    return os.str();
}

}  // namespace

Catalog Catalog::load(const std::string& root) {
    std::filesystem::path manifest = std::filesystem::path(root) / "manifest.tsv";
    std::ifstream in(manifest);
    if (!in) throw CatalogError("cannot open " + manifest.string());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();

    Catalog cat;
    cat.root_ = root;
    cat.digest_ = fnv1a_hex(bytes);

    std::istringstream lines(bytes);
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        size_t pos = 0;
        while (true) {
            size_t tab = line.find('\t', pos);
            cols.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
            if (tab == std::string::npos) break;
            pos = tab + 1;
        }
        if (!header_seen) {
            if (cols.size() != 5 || cols[0] != "name" || cols[1] != "file" ||
                cols[2] != "expected_vertices" || cols[3] != "expected_edges" ||
                cols[4] != "provenance")
                throw CatalogError(manifest.string() + ": bad header line");
            header_seen = true;
            continue;
        }
        if (cols.size() != 5)
            throw CatalogError(manifest.string() + " line " + std::to_string(lineno) +
                               ": expected 5 tab-separated columns");
        ManifestRow r;
        r.name = cols[0];
        r.file = cols[1];
        try {
            r.expected_vertices = std::stoi(cols[2]);
            r.expected_edges = std::stoi(cols[3]);
        } catch (const std::exception&) {
            throw CatalogError(manifest.string() + " line " + std::to_string(lineno) +
                               ": non-numeric count");
        }
        r.provenance = cols[4];
        if (cat.has(r.name))
            throw CatalogError(manifest.string() + ": duplicate entry " + r.name);
        cat.rows_.push_back(std::move(r));
    }
    if (!header_seen) throw CatalogError(manifest.string() + ": empty manifest");

    // validate every row against its file
    for (const ManifestRow& r : cat.rows_) {
        Graph g;
        try {
            g = cat.graph(r.name);
        } catch (const CatalogError&) {
            throw;
        } catch (const std::exception& ex) {
            throw CatalogError(r.name + " (" + r.file + "): " + ex.what());
        }
        if (g.vertex_count() != r.expected_vertices || g.edge_count() != r.expected_edges)
            throw CatalogError(r.name + " (" + r.file + "): has " +
                               std::to_string(g.vertex_count()) + " vertices / " +
                               std::to_string(g.edge_count()) + " edges, manifest expects " +
                               std::to_string(r.expected_vertices) + " / " +
                               std::to_string(r.expected_edges));
    }
    return cat;
}

std::string Catalog::path_of(const ManifestRow& r) const {
    return (std::filesystem::path(root_) / r.file).string();
}

bool Catalog::has(const std::string& name) const {
    for (const ManifestRow& r : rows_)
        if (r.name == name) return true;
    return false;
}

const ManifestRow& Catalog::row(const std::string& name) const {
    for (const ManifestRow& r : rows_)
        if (r.name == name) return r;
    throw CatalogError("no catalog entry named " + name);
}

Graph Catalog::graph(const std::string& name) const {
    const ManifestRow& r = row(name);
    if (ends_with(r.file, ".emb")) {
        Rp2Embedding emb = read_embedding_file(path_of(r));
        if (!is_valid_embedding(emb))
            throw CatalogError(name + " (" + r.file + "): not a valid embedding");
        Graph g = emb.graph;
        g.set_name(name);
        return g;
    }
    Graph g = read_edge_list_file(path_of(r));
    g.set_name(name);
    return g;
}

Rp2Embedding Catalog::drawing(const std::string& name) const {
    const ManifestRow& r = row(name);
    if (!ends_with(r.file, ".emb"))
        throw CatalogError(name + " (" + r.file + "): not a drawing entry");
    Rp2Embedding emb = read_embedding_file(path_of(r));
    if (!is_valid_embedding(emb))
        throw CatalogError(name + " (" + r.file + "): not a valid embedding");
    return emb;
}

std::vector<std::string> Catalog::names_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (const ManifestRow& r : rows_)
        if (r.name.rfind(prefix, 0) == 0) out.push_back(r.name);
    return out;
}

ObstructionSet Catalog::obstructions() const {
    ObstructionSet set;
    set.name = "nonprojective-planar minor-minimal obstructions";
    for (const std::string& n : names_with_prefix("obstruction-")) {
        set.graphs.push_back(graph(n));
        if (set.provenance.find(row(n).provenance) == std::string::npos) {
            if (!set.provenance.empty()) set.provenance += "; ";
            set.provenance += row(n).provenance;
        }
    }
    if (set.graphs.empty()) throw CatalogError("catalog has no obstruction entries");
    return set;
}

std::optional<int> Catalog::marked_y_vertex(const std::string& name) const {
    std::ifstream in(path_of(row(name)));
    if (!in) throw CatalogError("cannot open file for " + name);
    std::string line;
    while (std::getline(in, line)) {
        size_t at = line.find("y-delta-vertex");
        if (line.empty() || line[0] != '#' || at == std::string::npos) continue;
        std::istringstream rest(line.substr(at + std::string("y-delta-vertex").size()));
        int v;
        if (rest >> v) return v;
        throw CatalogError(name + ": malformed y-delta-vertex comment");
    }
    return std::nullopt;
}

}  // namespace projlink
