#ifndef DPCOLOR_GRAPH_HPP
#define DPCOLOR_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/errors.hpp"

namespace dpcolor {

// Hard cap for isomorphism-free enumeration sweeps.
inline constexpr int kMaxEnumerationVertices = 7;
// Practical cap for canonical-form computations (66 vertex pairs fit in 128 bits).
inline constexpr int kMaxCanonicalVertices = 12;

// Simple undirected graph with stable vertex indices 0..n-1.
// Edges are stored as pairs (u,v) with u < v, sorted and deduplicated;
// adjacency lists are derived and kept sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    // Validates endpoints, rejects self-loops and duplicate edges.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

    bool has_edge(int u, int v) const;
    // Index into `edges` for the pair {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

// Named graph families with fixed, documented vertex numbering:
//   path(n):     0-1-...-(n-1), n >= 1
//   cycle(n):    rim 0-1-...-(n-1)-0, n >= 3
//   complete(n): all pairs, n >= 1
//   star(n):     leaves 0..n-2, hub n-1 (hub last), n >= 1
//   wheel(n):    n+1 vertices; rim cycle 0..n-1, hub n (hub last), n >= 3
//   complete_bipartite(a,b): part A = 0..a-1, part B = a..a+b-1
//   theta(r,s,t): branch vertices 0 and 1; the three internally disjoint
//     paths have lengths r, s, t with internal vertices numbered
//     2..r, r+1..r+s-1, r+s..r+s+t-2 in path order. All lengths >= 1 and
//     at most one equal to 1 (two length-1 paths would be parallel edges).
enum class Family { path, cycle, complete, star, wheel, complete_bipartite, theta };

Graph make_family(Family kind, const std::vector<int>& params);
std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family kind);

bool is_connected(const Graph& g);
// True iff g has >= 3 vertices, is connected, and has no cut vertex.
bool is_two_connected(const Graph& g);

// Deterministic spanning tree: breadth-first from vertex 0, neighbors in
// ascending order. Throws ConnectivityError on disconnected input.
std::vector<std::pair<int, int>> spanning_tree(const Graph& g);
// Breadth-first spanning forest, one tree per component (roots = smallest
// vertex of each component).
std::vector<std::pair<int, int>> spanning_forest(const Graph& g);

// A shortest cycle as a vertex sequence (closing edge implied), or empty
// if the graph is a forest. Deterministic.
std::vector<int> shortest_cycle(const Graph& g);

// All simple cycles, each reported once as a vertex sequence starting at its
// smallest vertex with the smaller neighbor second. Intended for small n.
std::vector<std::vector<int>> all_cycles(const Graph& g);

// One ear: a path end_u, internal..., end_v glued onto earlier pieces.
// The ear has internal.size()+1 edges.
struct Ear {
    int end_u = 0;
    std::vector<int> internal;
    int end_v = 0;
};

struct EarDecomposition {
    std::vector<int> initial_cycle;
    std::vector<Ear> ears;
};

// Ear decomposition starting from the given cycle (or a shortest cycle when
// none is given). Throws StructureError if g is not 2-connected and
// ParameterError if initial_cycle is not a cycle of g.
EarDecomposition ear_decomposition(const Graph& g,
                                   const std::optional<std::vector<int>>& initial_cycle = std::nullopt);

// Checks the decomposition invariants: the initial piece is a cycle of g,
// ear endpoints are old vertices, ear internals are new, the pieces
// partition E(g), and every vertex is covered exactly once.
void validate_ear_decomposition(const Graph& g, const EarDecomposition& ed);

enum class GraphClass { connected, two_connected, unicyclic, tree };

// Exactly one representative per isomorphism class satisfying the predicate,
// in deterministic order (first-seen over the edge-subset enumeration).
// Throws CapacityError for n > kMaxEnumerationVertices.
std::vector<Graph> enumerate_graphs(int n, GraphClass cls);

// Canonical form: vertex count plus the lexicographically smallest adjacency
// encoding over all orderings compatible with iterated degree refinement.
// Two graphs are isomorphic iff their keys compare equal.
struct GraphKey {
    int n = 0;
    unsigned __int128 bits = 0;
    bool operator==(const GraphKey& o) const { return n == o.n && bits == o.bits; }
    bool operator<(const GraphKey& o) const {
        return n != o.n ? n < o.n : bits < o.bits;
    }
};

struct GraphKeyHash {
    std::size_t operator()(const GraphKey& k) const {
        auto lo = static_cast<std::uint64_t>(k.bits);
        auto hi = static_cast<std::uint64_t>(k.bits >> 64);
        std::uint64_t h = lo ^ (hi * 0x9e3779b97f4a7c15ULL) ^ (static_cast<std::uint64_t>(k.n) << 56);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

GraphKey canonical_key(const Graph& g);

// Text format: line 1 "n e"; then e lines "u v" with 0 <= u < v < n.
// '#' starts a comment that runs to end of line.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

} // namespace dpcolor

#endif
