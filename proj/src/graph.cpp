// Graph representation, named families, structural algorithms and
// isomorphism-free enumeration of small graphs.

#include "dpcolor/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace dpcolor {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw ParameterError("vertex count must be nonnegative");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw ParameterError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw ParameterError("duplicate edge");
    Graph g;
    g.n = n;
    g.edges = std::move(edge_list);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it != edges.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges.begin());
    return -1;
}

namespace {

Graph make_path(int n) {
    if (n < 1) throw ParameterError("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(e));
}

Graph make_cycle(int n) {
    if (n < 3) throw ParameterError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(e));
}

Graph make_complete(int n) {
    if (n < 1) throw ParameterError("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

Graph make_star(int n) {
    if (n < 1) throw ParameterError("star needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, n - 1);
    return Graph::from_edges(n, std::move(e));
}

Graph make_wheel(int n) {
    if (n < 3) throw ParameterError("wheel needs rim length n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    for (int i = 0; i < n; ++i) e.emplace_back(i, n);
    return Graph::from_edges(n + 1, std::move(e));
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw ParameterError("complete bipartite parts must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph::from_edges(a + b, std::move(e));
}

Graph make_theta(int r, int s, int t) {
    int ones = (r == 1) + (s == 1) + (t == 1);
    if (r < 1 || s < 1 || t < 1 || ones > 1)
        throw ParameterError("theta paths must have length >= 1 with at most one length-1 path");
    std::vector<std::pair<int, int>> e;
    int next = 2;
    for (int len : {r, s, t}) {
        int prev = 0;
        for (int i = 0; i + 1 < len; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, 1);
    }
    return Graph::from_edges(next, std::move(e));
}

} // namespace

Graph make_family(Family kind, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw ParameterError(family_name(kind) + " takes " + std::to_string(k) +
                                 " parameter(s), got " + std::to_string(params.size()));
    };
    switch (kind) {
        case Family::path: need(1); return make_path(params[0]);
        case Family::cycle: need(1); return make_cycle(params[0]);
        case Family::complete: need(1); return make_complete(params[0]);
        case Family::star: need(1); return make_star(params[0]);
        case Family::wheel: need(1); return make_wheel(params[0]);
        case Family::complete_bipartite: need(2); return make_complete_bipartite(params[0], params[1]);
        case Family::theta: need(3); return make_theta(params[0], params[1], params[2]);
    }
    throw ParameterError("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    if (name == "wheel") return Family::wheel;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "theta") return Family::theta;
    return std::nullopt;
}

std::string family_name(Family kind) {
    switch (kind) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::star: return "star";
        case Family::wheel: return "wheel";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::theta: return "theta";
    }
    return "?";
}

namespace {

// Connectivity of the subgraph induced by the non-excluded vertices.
bool connected_excluding(const Graph& g, int excluded) {
    int start = -1;
    for (int v = 0; v < g.n; ++v)
        if (v != excluded) { start = v; break; }
    if (start < 0) return true;
    std::vector<bool> seen(g.n, false);
    seen[start] = true;
    int reached = 1;
    std::deque<int> q{start};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.adj[v])
            if (w != excluded && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push_back(w);
            }
    }
    return reached == g.n - (excluded >= 0 ? 1 : 0);
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return connected_excluding(g, -1);
}

bool is_two_connected(const Graph& g) {
    if (g.n < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (!connected_excluding(g, v)) return false;
    return true;
}

std::vector<std::pair<int, int>> spanning_forest(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    std::vector<bool> seen(g.n, false);
    for (int root = 0; root < g.n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    out.emplace_back(std::min(v, w), std::max(v, w));
                    q.push_back(w);
                }
        }
    }
    return out;
}

std::vector<std::pair<int, int>> spanning_tree(const Graph& g) {
    if (!is_connected(g) || g.n == 0)
        throw ConnectivityError("spanning_tree requires a connected nonempty graph");
    return spanning_forest(g);
}

namespace {

// Shortest path from `from` to `to` avoiding edge (from,to); empty if none.
std::vector<int> shortest_path_avoiding_edge(const Graph& g, int from, int to) {
    std::vector<int> parent(g.n, -1);
    std::deque<int> q{from};
    parent[from] = from;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.adj[v]) {
            if (v == from && w == to) continue;
            if (v == to && w == from) continue;
            if (parent[w] < 0) {
                parent[w] = v;
                if (w == to) {
                    std::vector<int> path{to};
                    while (path.back() != from) path.push_back(parent[path.back()]);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                q.push_back(w);
            }
        }
    }
    return {};
}

} // namespace

std::vector<int> shortest_cycle(const Graph& g) {
    std::vector<int> best;
    for (auto [u, v] : g.edges) {
        auto path = shortest_path_avoiding_edge(g, u, v);
        if (path.empty()) continue;
        if (best.empty() || path.size() < best.size()) best = path;
    }
    return best;
}

std::vector<std::vector<int>> all_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<bool> used(g.n, false);

    // Cycles whose smallest vertex is path[0]; canonical direction has
    // path[1] < last vertex.
    auto extend = [&](auto&& self, int v) -> void {
        for (int w : g.adj[v]) {
            if (w == path[0]) {
                if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
                continue;
            }
            if (w < path[0] || used[w]) continue;
            used[w] = true;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = false;
        }
    };

    for (int s = 0; s < g.n; ++s) {
        path = {s};
        used.assign(g.n, false);
        used[s] = true;
        extend(extend, s);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

namespace {

void check_cycle_of_graph(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw ParameterError("initial cycle needs >= 3 vertices");
    std::vector<bool> seen(g.n, false);
    for (int v : cycle) {
        if (v < 0 || v >= g.n) throw ParameterError("cycle vertex out of range");
        if (seen[v]) throw ParameterError("cycle repeats a vertex");
        seen[v] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
            throw ParameterError("cycle uses a non-edge");
}

} // namespace

EarDecomposition ear_decomposition(const Graph& g,
                                   const std::optional<std::vector<int>>& initial_cycle) {
    if (!is_two_connected(g)) throw StructureError("ear decomposition requires a 2-connected graph");

    EarDecomposition ed;
    if (initial_cycle) {
        check_cycle_of_graph(g, *initial_cycle);
        ed.initial_cycle = *initial_cycle;
    } else {
        ed.initial_cycle = shortest_cycle(g);
    }

    std::vector<bool> in_sub(g.n, false);
    std::vector<bool> edge_used(g.edges.size(), false);
    for (std::size_t i = 0; i < ed.initial_cycle.size(); ++i) {
        int a = ed.initial_cycle[i];
        int b = ed.initial_cycle[(i + 1) % ed.initial_cycle.size()];
        in_sub[a] = true;
        edge_used[g.edge_index(a, b)] = true;
    }

    std::size_t used_count =
        static_cast<std::size_t>(std::count(edge_used.begin(), edge_used.end(), true));
    while (used_count < g.edges.size()) {
        // First unused edge touching the current subgraph, canonical order.
        int anchor = -1, other = -1, eidx = -1;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (edge_used[i]) continue;
            auto [u, v] = g.edges[i];
            if (in_sub[u]) { anchor = u; other = v; eidx = static_cast<int>(i); break; }
            if (in_sub[v]) { anchor = v; other = u; eidx = static_cast<int>(i); break; }
        }
        if (eidx < 0) throw InternalError("ear decomposition: no attachable edge");

        Ear ear;
        ear.end_u = anchor;
        edge_used[eidx] = true;
        ++used_count;
        if (in_sub[other]) {
            ear.end_v = other; // chord
        } else {
            // Walk from `other` through new vertices back to the subgraph,
            // avoiding the anchor (2-connectivity guarantees a way around).
            std::vector<int> parent(g.n, -1);
            parent[other] = other;
            std::deque<int> q{other};
            int hit = -1;
            while (!q.empty() && hit < 0) {
                int v = q.front();
                q.pop_front();
                for (int w : g.adj[v]) {
                    if (w == anchor || parent[w] >= 0) continue;
                    if (in_sub[w]) { parent[w] = v; hit = w; break; }
                    parent[w] = v;
                    q.push_back(w);
                }
            }
            if (hit < 0) throw InternalError("ear decomposition: no return path");
            std::vector<int> tail{hit};
            while (tail.back() != other) tail.push_back(parent[tail.back()]);
            std::reverse(tail.begin(), tail.end()); // other ... hit
            ear.end_v = hit;
            for (std::size_t i = 0; i + 1 < tail.size(); ++i) {
                ear.internal.push_back(tail[i]);
                in_sub[tail[i]] = true;
                edge_used[g.edge_index(tail[i], tail[i + 1])] = true;
                ++used_count;
            }
        }
        ed.ears.push_back(std::move(ear));
    }
    return ed;
}

void validate_ear_decomposition(const Graph& g, const EarDecomposition& ed) {
    check_cycle_of_graph(g, ed.initial_cycle);
    std::vector<bool> seen(g.n, false);
    std::vector<int> edge_use(g.edges.size(), 0);
    for (std::size_t i = 0; i < ed.initial_cycle.size(); ++i) {
        int a = ed.initial_cycle[i];
        int b = ed.initial_cycle[(i + 1) % ed.initial_cycle.size()];
        seen[a] = true;
        ++edge_use[g.edge_index(a, b)];
    }
    for (const Ear& ear : ed.ears) {
        if (!seen[ear.end_u] || !seen[ear.end_v])
            throw StructureError("ear endpoint is not an old vertex");
        std::vector<int> walk{ear.end_u};
        walk.insert(walk.end(), ear.internal.begin(), ear.internal.end());
        walk.push_back(ear.end_v);
        for (int v : ear.internal) {
            if (v < 0 || v >= g.n || seen[v]) throw StructureError("ear internal vertex is not new");
            seen[v] = true;
        }
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            int idx = g.edge_index(walk[i], walk[i + 1]);
            if (idx < 0) throw StructureError("ear uses a non-edge");
            ++edge_use[idx];
        }
    }
    for (int c : edge_use)
        if (c != 1) throw StructureError("pieces do not partition the edge set");
    for (int v = 0; v < g.n; ++v)
        if (!seen[v]) throw StructureError("vertex not covered by any piece");
}

// ---------------------------------------------------------------------------
// Canonical forms.

namespace {

struct CanonSearch {
    int n;
    const std::vector<std::uint16_t>& rows;
    std::vector<std::vector<int>> class_vertices; // by position block
    std::vector<int> block_of_pos;
    std::vector<int> perm;      // position -> vertex
    std::uint32_t used = 0;
    unsigned __int128 partial = 0;
    unsigned __int128 best = ~static_cast<unsigned __int128>(0);
    bool have_best = false;

    void run(int pos) {
        if (pos == n) {
            if (!have_best || partial < best) {
                best = partial;
                have_best = true;
            }
            return;
        }
        const auto& cands = class_vertices[block_of_pos[pos]];
        int ords_before = pos * (pos - 1) / 2;
        std::vector<int> tried;
        for (int v : cands) {
            if (used >> v & 1) continue;
            bool twin = false;
            for (int u : tried) {
                std::uint16_t m = static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
                if ((rows[u] & m) == (rows[v] & m)) { twin = true; break; }
            }
            if (twin) continue;
            tried.push_back(v);

            unsigned __int128 bits = partial;
            for (int q = 0; q < pos; ++q)
                if (rows[perm[q]] >> v & 1)
                    bits |= static_cast<unsigned __int128>(1) << (127 - (ords_before + q));
            if (have_best) {
                int shift = 128 - (ords_before + pos);
                if ((bits >> shift) > (best >> shift)) continue;
            }
            perm[pos] = v;
            used |= 1u << v;
            unsigned __int128 saved = partial;
            partial = bits;
            run(pos + 1);
            partial = saved;
            used &= ~(1u << v);
        }
    }
};

unsigned __int128 canonical_bits(int n, const std::vector<std::uint16_t>& rows) {
    if (n == 0) return 0;
    // Iterated refinement: split vertex classes by multisets of neighbor classes.
    std::vector<int> color(n, 0);
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (rows[v] >> w & 1) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> ids;
        for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
        int next = 0;
        for (auto& [k, id] : ids) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = ids[sig[v]];
        if (fresh == color) break;
        color = std::move(fresh);
    }

    int classes = *std::max_element(color.begin(), color.end()) + 1;
    CanonSearch s{n, rows, {}, {}, std::vector<int>(n), 0, 0,
                  ~static_cast<unsigned __int128>(0), false};
    s.class_vertices.resize(classes);
    for (int v = 0; v < n; ++v) s.class_vertices[color[v]].push_back(v);
    for (int c = 0; c < classes; ++c)
        for (std::size_t i = 0; i < s.class_vertices[c].size(); ++i) s.block_of_pos.push_back(c);
    s.run(0);
    return s.best;
}

std::vector<std::uint16_t> adjacency_rows(const Graph& g) {
    std::vector<std::uint16_t> rows(g.n, 0);
    for (auto [u, v] : g.edges) {
        rows[u] |= static_cast<std::uint16_t>(1u << v);
        rows[v] |= static_cast<std::uint16_t>(1u << u);
    }
    return rows;
}

} // namespace

GraphKey canonical_key(const Graph& g) {
    if (g.n > kMaxCanonicalVertices)
        throw CapacityError("canonical form limited to " + std::to_string(kMaxCanonicalVertices) +
                            " vertices");
    return GraphKey{g.n, canonical_bits(g.n, adjacency_rows(g))};
}

// ---------------------------------------------------------------------------
// Enumeration of small graphs, one representative per isomorphism class.

std::vector<Graph> enumerate_graphs(int n, GraphClass cls) {
    if (n < 1) throw ParameterError("enumerate_graphs needs n >= 1");
    if (n > kMaxEnumerationVertices)
        throw CapacityError("enumeration capped at " + std::to_string(kMaxEnumerationVertices) +
                            " vertices, asked for " + std::to_string(n));

    const int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_of_bit;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pair_of_bit.emplace_back(u, v);

    std::vector<Graph> out;
    std::unordered_set<unsigned long long> seen;
    std::vector<std::uint16_t> rows(n);
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        std::fill(rows.begin(), rows.end(), 0);
        int ec = 0;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) {
                auto [u, v] = pair_of_bit[b];
                rows[u] |= static_cast<std::uint16_t>(1u << v);
                rows[v] |= static_cast<std::uint16_t>(1u << u);
                ++ec;
            }

        // Cheap predicate screen before canonicalizing.
        auto conn = [&]() {
            std::uint32_t seen_mask = 1, frontier = 1;
            while (frontier) {
                std::uint32_t next = 0;
                for (int v = 0; v < n; ++v)
                    if (frontier >> v & 1) next |= rows[v];
                next &= ~seen_mask;
                seen_mask |= next;
                frontier = next;
            }
            return seen_mask == (1u << n) - 1;
        };
        bool ok = false;
        switch (cls) {
            case GraphClass::connected: ok = conn(); break;
            case GraphClass::tree: ok = ec == n - 1 && conn(); break;
            case GraphClass::unicyclic: ok = ec == n && conn(); break;
            case GraphClass::two_connected: {
                if (n < 3 || !conn()) { ok = false; break; }
                ok = true;
                for (int v = 0; v < n && ok; ++v) {
                    std::uint32_t avail = ((1u << n) - 1) & ~(1u << v);
                    std::uint32_t start = avail & (~avail + 1);
                    std::uint32_t seen_mask = start, frontier = start;
                    while (frontier) {
                        std::uint32_t next = 0;
                        for (int w = 0; w < n; ++w)
                            if (frontier >> w & 1) next |= rows[w];
                        next &= avail & ~seen_mask;
                        seen_mask |= next;
                        frontier = next;
                    }
                    ok = seen_mask == avail;
                }
                break;
            }
        }
        if (!ok) continue;

        unsigned __int128 canon = canonical_bits(n, rows);
        auto folded = static_cast<unsigned long long>(canon >> 64) * 0x9e3779b97f4a7c15ULL ^
                      static_cast<unsigned long long>(canon);
        if (!seen.insert(folded).second) continue;

        std::vector<std::pair<int, int>> e;
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) e.push_back(pair_of_bit[b]);
        out.push_back(Graph::from_edges(n, std::move(e)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format.

namespace {

std::string strip_comments(std::istream& in) {
    std::string all, line;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        all += line;
        all += '\n';
    }
    return all;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::istringstream ss(strip_comments(in));
    long long n, e;
    if (!(ss >> n >> e)) throw ParseError("graph file: missing 'n e' header");
    if (n < 0 || e < 0) throw ParseError("graph file: negative counts");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < e; ++i) {
        long long u, v;
        if (!(ss >> u >> v)) throw ParseError("graph file: expected " + std::to_string(e) +
                                              " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
            throw ParseError("graph file: edge " + std::to_string(i) + " must satisfy 0 <= u < v < n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (ss >> extra) throw ParseError("graph file: trailing content '" + extra + "'");
    try {
        return Graph::from_edges(static_cast<int>(n), std::move(edges));
    } catch (const ParameterError& err) {
        throw ParseError(std::string("graph file: ") + err.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

} // namespace dpcolor
