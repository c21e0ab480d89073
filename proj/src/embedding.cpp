#include "projlink/embedding.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace projlink {

namespace {

// Face tracing states are darts with a local orientation: (tail, head, o).
// Crossing a negative edge flips the orientation; the rotation at the head is
// then read forwards (+) or backwards (-). Each face corresponds to exactly
// two state orbits (the two traversal directions).
struct State {
    int u, v, o;  // o in {+1, -1}
    bool operator==(const State& s) const { return u == s.u && v == s.v && o == s.o; }
};

inline int state_id(const State& s) { return ((s.u * 32 + s.v) << 1) | (s.o > 0); }

using SignFn = std::function<int(int, int)>;

struct Tracer {
    int n;
    const std::vector<std::vector<int>>& rot;
    SignFn sign;
    int pos[32][32];  // pos[v][u] = index of u in rot[v]

    Tracer(int n_, const std::vector<std::vector<int>>& r, SignFn s)
        : n(n_), rot(r), sign(std::move(s)) {
        for (int v = 0; v < n; ++v)
            for (size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = static_cast<int>(i);
    }

    State next(const State& s) const {
        int o2 = s.o * sign(s.u, s.v);
        int d = static_cast<int>(rot[s.v].size());
        int i = pos[s.v][s.u];
        int j = o2 > 0 ? (i + 1) % d : (i + d - 1) % d;
        return State{s.v, rot[s.v][j], o2};
    }

    static State rev(const State& s, int sgn) { return State{s.v, s.u, -s.o * sgn}; }

    // All orbits, each a state sequence starting from its smallest-id state.
    std::vector<std::vector<State>> orbits() const {
        std::vector<int8_t> seen(2048, 0);
        std::vector<std::vector<State>> out;
        for (int u = 0; u < n; ++u)
            for (int w : rot[u])
                for (int o : {-1, 1}) {
                    State start{u, w, o};
                    if (seen[state_id(start)]) continue;
                    std::vector<State> orbit;
                    State s = start;
                    size_t best = 0;
                    do {
                        seen[state_id(s)] = 1;
                        if (state_id(s) < state_id(orbit.empty() ? s : orbit[best]))
                            best = orbit.size();
                        orbit.push_back(s);
                        s = next(s);
                    } while (!(s == start));
                    std::rotate(orbit.begin(), orbit.begin() + best, orbit.end());
                    out.push_back(std::move(orbit));
                }
        return out;
    }
};

// Keep one orbit of each mirror pair; throws if an orbit is its own mirror
// (cannot happen for a consistent rotation/signature pair).
std::vector<std::vector<State>> paired_faces(const Tracer& t) {
    auto orbs = t.orbits();
    std::vector<int> owner(2048, -1);
    for (size_t i = 0; i < orbs.size(); ++i)
        for (const State& s : orbs[i]) owner[state_id(s)] = static_cast<int>(i);
    std::vector<std::vector<State>> faces;
    std::vector<int8_t> dropped(orbs.size(), 0);
    for (size_t i = 0; i < orbs.size(); ++i) {
        if (dropped[i]) continue;
        const State& s = orbs[i][0];
        State r = Tracer::rev(s, t.sign(s.u, s.v));
        int j = owner[state_id(r)];
        if (j == static_cast<int>(i)) throw EmbeddingError("self-paired face orbit");
        dropped[j] = 1;
        faces.push_back(orbs[i]);
    }
    return faces;
}

SignFn make_sign(const std::set<Edge>& neg) {
    return [&neg](int u, int v) { return neg.count(make_edge(u, v)) ? -1 : 1; };
}

int count_faces(int n, const std::vector<std::vector<int>>& rot, const std::set<Edge>& neg) {
    int edges = 0;
    for (int v = 0; v < n; ++v) edges += static_cast<int>(rot[v].size());
    if (edges == 0) return 1;
    Tracer t(n, rot, make_sign(neg));
    return static_cast<int>(t.orbits().size()) / 2;
}

}  // namespace

void validate_structure(const Rp2Embedding& emb) {
    int n = emb.graph.vertex_count();
    if (static_cast<int>(emb.rotation.size()) != n)
        throw EmbeddingError("rotation table size does not match vertex count");
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb = emb.graph.neighbors(v);
        std::vector<int> r = emb.rotation[v];
        std::sort(r.begin(), r.end());
        if (r != nb) throw EmbeddingError("rotation at vertex does not list its neighbors");
    }
    for (const Edge& e : emb.negative_edges)
        if (e.first < 0 || e.second >= n || !emb.graph.has_edge(e.first, e.second))
            throw EmbeddingError("negative signature on a non-edge");
}

std::vector<FaceWalk> trace_faces(const Rp2Embedding& emb) {
    validate_structure(emb);
    if (emb.graph.edge_count() == 0) {
        if (emb.graph.vertex_count() == 0) return {};
        return {FaceWalk{}};  // the whole surface is one face
    }
    Tracer t(emb.graph.vertex_count(), emb.rotation, make_sign(emb.negative_edges));
    std::vector<FaceWalk> walks;
    for (const auto& orbit : paired_faces(t)) {
        FaceWalk w;
        for (const State& s : orbit) w.emplace_back(s.u, s.v);
        walks.push_back(std::move(w));
    }
    std::sort(walks.begin(), walks.end());
    return walks;
}

int euler_value(const Rp2Embedding& emb) {
    validate_structure(emb);
    int f = emb.graph.edge_count() == 0
                ? (emb.graph.vertex_count() > 0 ? 1 : 0)
                : count_faces(emb.graph.vertex_count(), emb.rotation, emb.negative_edges);
    return emb.graph.vertex_count() - emb.graph.edge_count() + f;
}

bool signature_is_trivial(const Rp2Embedding& emb) {
    const Graph& g = emb.graph;
    int n = g.vertex_count();
    std::vector<int> pot(n, 0);
    for (uint32_t comp : g.components()) {
        int root = std::countr_zero(comp);
        pot[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (pot[w] == 0) {
                    pot[w] = pot[v] * emb.sign(v, w);
                    q.push(w);
                }
            }
        }
    }
    for (auto [u, v] : g.edges())
        if (emb.sign(u, v) != pot[u] * pot[v]) return false;
    return true;
}

bool is_valid_embedding(const Rp2Embedding& emb) {
    try {
        validate_structure(emb);
    } catch (const EmbeddingError&) {
        return false;
    }
    if (!emb.graph.is_connected()) return false;
    int e = euler_value(emb);
    if (e == 1) return true;
    return e == 2 && signature_is_trivial(emb);
}

int cycle_homology(const Rp2Embedding& emb, const EmbCycle& c) {
    size_t k = c.size();
    if (k < 3) throw EmbeddingError("cycle needs at least three vertices");
    std::vector<int> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw EmbeddingError("repeated vertex in cycle");
    int prod = 1;
    for (size_t i = 0; i < k; ++i) {
        int u = c[i], v = c[(i + 1) % k];
        if (!emb.graph.has_edge(u, v)) throw EmbeddingError("cycle uses a non-edge");
        prod *= emb.sign(u, v);
    }
    return prod < 0 ? 1 : 0;
}

std::vector<Edge> one_homologous_edges(const Rp2Embedding& emb) {
    return {emb.negative_edges.begin(), emb.negative_edges.end()};
}

Rp2Embedding switch_vertex(const Rp2Embedding& emb, int v) {
    // flip the local orientation at v: reverse its rotation and negate the
    // signature of every incident edge; faces and homology are unchanged
    Rp2Embedding out = emb;
    std::reverse(out.rotation[v].begin(), out.rotation[v].end());
    for (int w : emb.graph.neighbors(v)) {
        Edge e = make_edge(v, w);
        if (!out.negative_edges.erase(e)) out.negative_edges.insert(e);
    }
    return out;
}

Rp2Embedding reflect(const Rp2Embedding& emb) {
    Rp2Embedding out = emb;
    for (auto& r : out.rotation) std::reverse(r.begin(), r.end());
    return out;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

namespace {

// Two-color the faces across non-cycle edges after cutting along c. Vertices
// in regions not touching the cut (possible only when the drawing is
// disconnected and a piece floats freely) belong to neither side.
std::pair<std::vector<int>, std::vector<int>> disk_sides_impl(const Rp2Embedding& emb,
                                                              const std::vector<FaceWalk>& faces,
                                                              const EmbCycle& c) {
    int nf = static_cast<int>(faces.size());
    std::map<Edge, std::vector<int>> edge_faces;
    std::vector<int> vertex_face(emb.graph.vertex_count(), -1);
    for (int f = 0; f < nf; ++f)
        for (auto [u, v] : faces[f]) {
            edge_faces[make_edge(u, v)].push_back(f);
            vertex_face[u] = f;
        }
    std::set<Edge> cycle_edges;
    for (size_t i = 0; i < c.size(); ++i) cycle_edges.insert(make_edge(c[i], c[(i + 1) % c.size()]));
    Dsu dsu(nf);
    for (const auto& [e, fs] : edge_faces)
        if (!cycle_edges.count(e))
            for (size_t i = 1; i < fs.size(); ++i) dsu.unite(fs[0], fs[i]);
    std::set<int> cut_regions;
    for (const Edge& e : cycle_edges)
        for (int f : edge_faces[e]) cut_regions.insert(dsu.find(f));
    uint32_t on_cycle = 0;
    for (int v : c) on_cycle |= 1u << v;
    std::vector<int> a, b;
    int a_root = -1;
    for (int v = 0; v < emb.graph.vertex_count(); ++v) {
        if ((on_cycle >> v) & 1u) continue;
        if (vertex_face[v] < 0) continue;  // isolated vertex: no face incidence
        int root = dsu.find(vertex_face[v]);
        if (!cut_regions.count(root)) continue;  // floating piece: neither side
        if (a_root < 0) a_root = root;
        (root == a_root ? a : b).push_back(v);
    }
    return {a, b};
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> disk_sides(const Rp2Embedding& emb,
                                                         const EmbCycle& c) {
    if (cycle_homology(emb, c) != 0) throw EmbeddingError("disk_sides needs a 0-homologous cycle");
    return disk_sides_impl(emb, trace_faces(emb), c);
}

bool is_separating_cycle_0(const Rp2Embedding& emb, const EmbCycle& c) {
    auto [a, b] = disk_sides(emb, c);
    return !a.empty() && !b.empty();
}

std::pair<std::vector<int>, std::vector<int>> sides_of_1hom_cycle(const Rp2Embedding& emb,
                                                                  const EmbCycle& c) {
    if (cycle_homology(emb, c) != 1)
        throw EmbeddingError("sides_of_1hom_cycle needs a 1-homologous cycle");
    validate_structure(emb);
    int k = static_cast<int>(c.size());
    // Transport a local orientation along the cycle; after one loop it flips,
    // so the second boundary copy of the cut-open disk carries the
    // complementary rotation arcs.
    std::vector<int> t(k, 1);
    for (int i = 1; i < k; ++i) t[i] = t[i - 1] * emb.sign(c[i - 1], c[i]);
    // copy_a[{v, x}] = true when dart v->x attaches to the first boundary copy
    std::map<std::pair<int, int>, bool> copy_a;
    for (int i = 0; i < k; ++i) {
        int v = c[i], prev = c[(i - 1 + k) % k], nxt = c[(i + 1) % k];
        const std::vector<int>& r = emb.rotation[v];
        int d = static_cast<int>(r.size());
        int ip = 0;
        while (r[ip] != prev) ++ip;
        // walk from prev in direction t[i]; darts before reaching nxt lie on
        // the current copy, the rest on the other copy
        bool current = true;
        for (int step = 1; step < d; ++step) {
            int x = r[((ip + step * t[i]) % d + d) % d];
            if (x == nxt) {
                current = false;
                continue;
            }
            copy_a[{v, x}] = current;
        }
    }
    uint32_t on_cycle = 0;
    for (int v : c) on_cycle |= 1u << v;
    uint32_t host_all =
        emb.graph.vertex_count() >= 31 ? 0x7fffffffu : (1u << emb.graph.vertex_count()) - 1u;
    uint32_t off = host_all & ~on_cycle;
    std::vector<int> a, b;
    uint32_t left = off;
    while (left) {
        int v0 = std::countr_zero(left);
        uint32_t comp = emb.graph.reach(v0, off);
        left &= ~comp;
        bool touch_a = false, touch_b = false;
        uint32_t m = comp;
        while (m) {
            int x = std::countr_zero(m);
            m &= m - 1;
            for (int v : c)
                if (emb.graph.has_edge(v, x)) (copy_a[{v, x}] ? touch_a : touch_b) = true;
        }
        if (touch_a == touch_b) continue;  // both copies or floating: neither side
        uint32_t mm = comp;
        while (mm) {
            int x = std::countr_zero(mm);
            mm &= mm - 1;
            (touch_a ? a : b).push_back(x);
        }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return {a, b};
}

std::vector<EmbCycle> enumerate_simple_cycles(const Graph& g, uint64_t budget) {
    std::vector<EmbCycle> out;
    uint64_t nodes = 0;
    int n = g.vertex_count();
    std::vector<int> path;
    uint32_t on_path = 0;
    // Each cycle reported once: lowest vertex first, lower neighbor second.
    std::function<void(int, int)> dfs = [&](int s, int u) {
        if (++nodes > budget) throw ResourceLimitError("cycle enumeration budget exceeded");
        for (int w : g.neighbors(u)) {
            if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            if (w <= s || ((on_path >> w) & 1u)) continue;
            path.push_back(w);
            on_path |= 1u << w;
            dfs(s, w);
            on_path &= ~(1u << w);
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path = 1u << s;
        dfs(s, s);
    }
    return out;
}

bool is_nonseparating_embedding(const Rp2Embedding& emb, uint64_t cycle_budget) {
    auto cycles = enumerate_simple_cycles(emb.graph, cycle_budget);
    std::vector<FaceWalk> faces;  // traced lazily, shared across all cycles
    for (const EmbCycle& c : cycles) {
        if (cycle_homology(emb, c) != 0) continue;
        if (faces.empty()) faces = trace_faces(emb);
        auto [a, b] = disk_sides_impl(emb, faces, c);
        if (!a.empty() && !b.empty()) return false;
    }
    return true;
}

bool has_separating_1hom_cycle(const Rp2Embedding& emb, uint64_t cycle_budget) {
    for (const EmbCycle& c : enumerate_simple_cycles(emb.graph, cycle_budget)) {
        if (cycle_homology(emb, c) != 1) continue;
        auto [a, b] = sides_of_1hom_cycle(emb, c);
        if (!a.empty() && !b.empty()) return true;
    }
    return false;
}

namespace {

// Depth-first edge insertion: edges are added one at a time (keeping the
// embedded prefix connected); every partial embedding must keep Euler value
// >= 1, which is monotone under insertion, so pruning is sound. Signatures
// are normalized by fixing first-touch (spanning tree) edges positive, which
// picks exactly one representative per switching class.
struct EmbedSearch {
    const Graph& g;
    int n;
    struct Step {
        int a, b;     // insert edge a-b; b is new when `fresh`
        bool fresh;
    };
    std::vector<Step> steps;
    std::vector<std::vector<int>> rot;
    std::set<Edge> neg;
    uint64_t budget, nodes = 0;
    int max_results;
    std::vector<Rp2Embedding> results;

    EmbedSearch(const Graph& graph, uint64_t b, int maxr)
        : g(graph), n(graph.vertex_count()), rot(n), budget(b), max_results(maxr) {
        // breadth-first vertex order from 0; tree edge first, then back edges
        std::vector<int> order, posn(n, -1), parent(n, -1);
        std::queue<int> q;
        q.push(0);
        posn[0] = 0;
        order.push_back(0);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v))
                if (posn[w] < 0) {
                    posn[w] = static_cast<int>(order.size());
                    parent[w] = v;
                    order.push_back(w);
                    q.push(w);
                }
        }
        for (size_t i = 1; i < order.size(); ++i) {
            int w = order[i];
            steps.push_back({parent[w], w, true});
            for (int x : g.neighbors(w))
                if (posn[x] < static_cast<int>(i) && x != parent[w])
                    steps.push_back({x, w, false});
        }
    }

    int partial_faces() const { return count_faces(n, rot, neg); }

    void emit() {
        Rp2Embedding emb{g, rot, neg};
        // reflection dedup: keep the lexicographically smaller of the pair
        // (mirror rotations re-pinned on the same first neighbor)
        std::vector<std::vector<int>> mirror(n);
        for (int v = 0; v < n; ++v) {
            const auto& r = rot[v];
            if (!r.empty()) {
                mirror[v].push_back(r[0]);
                for (size_t i = r.size(); i > 1; --i) mirror[v].push_back(r[i - 1]);
            }
        }
        if (mirror < rot) return;
        results.push_back(std::move(emb));
    }

    bool done() const { return max_results >= 0 && static_cast<int>(results.size()) >= max_results; }

    void dfs(size_t idx, int verts, int edges) {
        if (done()) return;
        if (idx == steps.size()) {
            emit();
            return;
        }
        const Step& st = steps[idx];
        auto try_insert = [&](int pa, int pb, bool negative) {
            if (++nodes > budget) throw ResourceLimitError("embedding search budget exceeded");
            rot[st.a].insert(rot[st.a].begin() + pa, st.b);
            if (st.fresh)
                rot[st.b].push_back(st.a);
            else
                rot[st.b].insert(rot[st.b].begin() + pb, st.a);
            Edge e = make_edge(st.a, st.b);
            if (negative) neg.insert(e);
            int nv = verts + (st.fresh ? 1 : 0);
            if (nv - (edges + 1) + partial_faces() >= 1) dfs(idx + 1, nv, edges + 1);
            if (negative) neg.erase(e);
            rot[st.a].erase(rot[st.a].begin() + pa);
            if (st.fresh)
                rot[st.b].pop_back();
            else
                rot[st.b].erase(rot[st.b].begin() + pb);
        };
        int da = static_cast<int>(rot[st.a].size());
        int db = static_cast<int>(rot[st.b].size());
        // cyclic gaps at a vertex of degree d are positions 1..d (position 0
        // would duplicate position d); an untouched vertex has one trivial gap
        int pa_lo = da == 0 ? 0 : 1, pa_hi = da == 0 ? 0 : da;
        for (int pa = pa_lo; pa <= pa_hi; ++pa) {
            if (done()) return;
            if (st.fresh) {
                try_insert(pa, 0, false);  // tree edges pinned positive
            } else {
                for (int pb = 1; pb <= db; ++pb) {
                    try_insert(pa, pb, false);
                    if (done()) return;
                    try_insert(pa, pb, true);
                    if (done()) return;
                }
            }
        }
    }
};

}  // namespace

std::vector<Rp2Embedding> enumerate_rp2_embeddings(const Graph& g, uint64_t budget,
                                                   bool first_only, int max_results) {
    if (!g.is_connected()) throw EmbeddingError("embedding enumeration needs a connected graph");
    if (g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 3) return {};
    if (g.edge_count() == 0) {
        Rp2Embedding single{g, std::vector<std::vector<int>>(g.vertex_count()), {}};
        return {single};
    }
    EmbedSearch s(g, budget, first_only ? 1 : max_results);
    s.dfs(0, 1, 0);
    std::sort(s.results.begin(), s.results.end());
    return s.results;
}

namespace {

Graph induced_subgraph(const Graph& g, uint32_t mask) {
    std::vector<int> map(g.vertex_count(), -1);
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1u) map[v] = k++;
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (map[u] >= 0 && map[v] >= 0) es.push_back(make_edge(map[u], map[v]));
    return Graph(k, es);
}

}  // namespace

bool embeds_in_rp2(const Graph& g, uint64_t budget) {
    std::vector<Graph> nonplanar;
    for (uint32_t comp : g.components()) {
        Graph h = induced_subgraph(g, comp);
        if (!is_planar(h)) nonplanar.push_back(h);
    }
    if (nonplanar.size() > 1) return false;  // two nonplanar pieces cannot share the plane cap
    if (nonplanar.empty()) return true;
    const Graph& h = nonplanar[0];
    if (h.vertex_count() >= 3 && h.edge_count() > 3 * h.vertex_count() - 3) return false;
    return !enumerate_rp2_embeddings(h, budget, true).empty();
}

Rp2Embedding y_delta_embedding(const Rp2Embedding& emb, int v) {
    if (emb.graph.degree(v) != 3) throw EmbeddingError("y_delta_embedding needs a degree-3 vertex");
    validate_structure(emb);
    Rp2Embedding cur = emb;
    // make the three Y edges positive by switching neighbors (an equivalence)
    for (int w : emb.graph.neighbors(v))
        if (cur.sign(v, w) < 0) cur = switch_vertex(cur, w);
    std::vector<int> tri = cur.rotation[v];  // cyclic order a, b, c
    Graph h = emb.graph;
    for (int i = 0; i < 3; ++i) {
        int x = tri[i], y = tri[(i + 1) % 3];
        if (!h.has_edge(x, y)) h = h.add_edge(x, y);
    }
    h = h.delete_vertex(v);
    auto relabel = [&](int x) { return x - (x > v ? 1 : 0); };
    std::vector<std::vector<int>> rot(h.vertex_count());
    for (int x = 0; x < emb.graph.vertex_count(); ++x) {
        if (x == v) continue;
        std::vector<int>& out = rot[relabel(x)];
        for (int w : cur.rotation[x]) {
            if (w != v) {
                out.push_back(relabel(w));
                continue;
            }
            // the freed disk at v hosts the triangle: the slot toward v is
            // replaced by the two partners, next-in-rotation first; a partner
            // already adjacent before the exchange keeps its existing slot
            int i = 0;
            while (i < 3 && tri[i] != x) ++i;
            for (int partner : {tri[(i + 1) % 3], tri[(i + 2) % 3]})
                if (!emb.graph.has_edge(x, partner)) out.push_back(relabel(partner));
        }
    }
    std::set<Edge> neg;
    for (const Edge& e : cur.negative_edges) {
        if (e.first == v || e.second == v) continue;
        neg.insert(make_edge(relabel(e.first), relabel(e.second)));
    }
    Rp2Embedding out{h, rot, neg};
    validate_structure(out);
    return out;
}

Rp2Embedding read_embedding(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    Rp2Embedding emb;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rot;
    std::set<Edge> neg;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n >> m) {
                if (n < 0 || n > Graph::kMaxVertices) throw EmbeddingError("bad vertex count");
                rot.assign(n, {});
            } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
                throw EmbeddingError("malformed embedding header");
            }
            continue;
        }
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "r") {
            std::string vtx;
            ls >> vtx;
            if (!vtx.empty() && vtx.back() == ':') vtx.pop_back();
            int v = std::stoi(vtx);
            if (v < 0 || v >= n) throw EmbeddingError("rotation vertex out of range");
            std::string tok;
            while (ls >> tok) {
                if (tok == ":") continue;
                int w = std::stoi(tok);
                rot[v].push_back(w);
                if (w > v) edges.push_back(make_edge(v, w));
            }
        } else if (tag == "s") {
            int u, w;
            if (!(ls >> u >> w)) throw EmbeddingError("malformed signature line");
            neg.insert(make_edge(u, w));
        } else {
            throw EmbeddingError("unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw EmbeddingError("missing embedding header");
    emb.graph = Graph(n, edges);
    emb.rotation = std::move(rot);
    emb.negative_edges = std::move(neg);
    validate_structure(emb);
    return emb;
}

Rp2Embedding read_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EmbeddingError("cannot open " + path);
    return read_embedding(in);
}

void write_embedding(std::ostream& out, const Rp2Embedding& emb) {
    out << emb.graph.vertex_count() << " " << emb.graph.edge_count() << "\n";
    for (int v = 0; v < emb.graph.vertex_count(); ++v) {
        out << "r " << v << ":";
        for (int w : emb.rotation[v]) out << " " << w;
        out << "\n";
    }
    for (const Edge& e : emb.negative_edges) out << "s " << e.first << " " << e.second << " -\n";
}

void write_embedding_file(const std::string& path, const Rp2Embedding& emb) {
    std::ofstream out(path);
    if (!out) throw EmbeddingError("cannot open " + path + " for writing");
    write_embedding(out, emb);
}

}  // namespace projlink
