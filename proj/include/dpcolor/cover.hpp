#ifndef DPCOLOR_COVER_HPP
#define DPCOLOR_COVER_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/perm.hpp"

namespace dpcolor {

// Fold counts this size and below keep the counting kernel's bitmasks small.
inline constexpr int kMaxFold = 16;

// A full m-fold cover of a graph, encoded as one permutation per edge:
// sigma[e] matches index i at the lower endpoint u of edge e = (u,v), u < v,
// to index sigma[e][i] at v. The reverse orientation carries the inverse.
// The induced cover satisfies the list-partition, clique, cross-edge and
// perfect-matching requirements by construction.
struct FullCover {
    Graph graph;
    int m = 0;
    std::vector<Perm> sigma;

    // Permutation seen from u towards v along an existing edge {u,v}.
    Perm oriented(int from, int to) const;
};

// Throws ParameterError if sigma does not hold one bijection of [m] per edge.
void validate_cover(const FullCover& h);

FullCover identity_cover(const Graph& g, int m);

// One list index per vertex; valid iff no edge matches the chosen pair.
using ColoringAssignment = std::vector<int>;
bool is_valid_coloring(const FullCover& h, const ColoringAssignment& a);
std::vector<ColoringAssignment> enumerate_colorings(const FullCover& h);

// Precomputed traversal order for the counting kernel: vertices breadth-first
// from a maximum-degree vertex, with the back-constraints each position must
// respect. Read-only once built; safe to share across threads.
struct CountingPlan {
    struct Back {
        int pos;      // earlier position carrying the constraining value
        int edge;     // index into graph.edges
        bool forward; // true when the earlier vertex is the lower endpoint
    };
    int n = 0;
    std::vector<int> order;
    std::vector<std::vector<Back>> backs;
};

CountingPlan make_counting_plan(const Graph& g);

// Caller-owned scratch for the kernel, reusable across calls.
struct CountScratch {
    std::vector<std::array<std::uint8_t, kMaxFold>> fwd, inv;
    std::vector<int> vals;
    std::vector<std::uint32_t> pin_mask;
};

long long count_with_plan(const CountingPlan& plan, const FullCover& h, CountScratch& scratch,
                          const std::vector<std::pair<int, int>>& pins = {});

// Exact number of valid colorings, by backtracking with forward pruning.
long long count_colorings(const FullCover& h);

// Slow reference: checks every one of the m^n assignments. Kept for tests,
// cross-checks and the benchmark.
long long count_colorings_reference(const FullCover& h);

// Number of valid colorings extending the given vertex -> index pins.
long long count_colorings_pinned(const FullCover& h, const std::vector<std::pair<int, int>>& pins);

// One permutation of [m] per vertex; rewrites sigma_uv to
// pi_v o sigma_uv o pi_u^{-1} and preserves coloring counts.
struct GaugeRelabeling {
    std::vector<Perm> pi;
};

GaugeRelabeling identity_relabeling(int n, int m);
GaugeRelabeling inverse_relabeling(const GaugeRelabeling& pi);

FullCover apply_gauge(const FullCover& h, const GaugeRelabeling& pi);

// Relabels so that every edge of the given spanning forest carries the
// identity; the smallest vertex of each forest component keeps the identity
// relabeling. Returns the rewritten cover and the relabeling that produced it.
std::pair<FullCover, GaugeRelabeling> gauge_normalize(const FullCover& h,
                                                      const std::vector<std::pair<int, int>>& forest);

// A relabeling making every edge permutation the identity, if one exists.
// Normalizes on a breadth-first spanning forest and succeeds iff every
// remaining edge permutation is already the identity.
std::optional<GaugeRelabeling> find_canonical_labeling(const FullCover& h);

// For a path a1-a2-a3 with a1a3 not an edge and every other edge carrying the
// identity, classifies the m disjoint cross-edge paths (a1,i)(a2,j)(a3,k) into
//   1: i=j=k   2: i=j!=k   3: i!=j=k   4: i!=j, i=k   5: all distinct
// and returns the five counts (summing to m).
std::array<int, 5> classify_two_path(const FullCover& h, int a1, int a2, int a3);

// Text format: line 1 "m"; then one line per edge in canonical order
// "u v p_0 ... p_{m-1}" matching (u,i) to (v,p_i). Every edge exactly once.
FullCover read_cover(const Graph& g, std::istream& in);
FullCover read_cover_file(const Graph& g, const std::string& path);
void write_cover(std::ostream& out, const FullCover& h);

} // namespace dpcolor

#endif
