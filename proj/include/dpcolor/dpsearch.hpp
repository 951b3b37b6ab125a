#ifndef DPCOLOR_DPSEARCH_HPP
#define DPCOLOR_DPSEARCH_HPP

#include <functional>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;

struct SearchOptions {
    unsigned long long budget = kDefaultBudget;
    int jobs = 1;
};

// Gauge-fixed enumeration of the full m-fold covers of a connected graph:
// identity permutations on a fixed breadth-first spanning tree, every
// assignment of permutations to the co-tree edges. Covers are indexed
// 0..size()-1 with co-tree permutations in lexicographic one-line order,
// first co-tree edge most significant. Every full cover of g is
// gauge-equivalent to exactly one cover in this space.
class CoverSpace {
 public:
    // Throws ConnectivityError if g is disconnected and CapacityError
    // (naming the required count) if (m!)^{|E|-n+1} exceeds the budget.
    CoverSpace(const Graph& g, int m, unsigned long long budget = kDefaultBudget);

    unsigned long long size() const { return size_; }
    const Graph& graph() const { return g_; }
    int fold() const { return m_; }
    const std::vector<int>& cotree_edges() const { return cotree_; }
    const std::vector<std::pair<int, int>>& tree() const { return tree_; }
    const std::vector<Perm>& permutations() const { return perms_; }

    // Mixed-radix decode of a cover index into per-co-tree-edge permutation
    // ranks, first edge most significant.
    void ranks_at(unsigned long long index, std::vector<int>& out) const;
    FullCover cover_at(unsigned long long index) const;

 private:
    Graph g_;
    int m_;
    std::vector<std::pair<int, int>> tree_;
    std::vector<int> cotree_;
    std::vector<Perm> perms_;
    unsigned long long size_ = 1;
};

// Calls visit(index, count) for every cover in the space, in index order.
void sweep_cover_counts_serial(const CoverSpace& space,
                               const std::function<void(unsigned long long, long long)>& visit);

struct DpSearchResult {
    int m = 0;
    long long min_count = 0;
    std::vector<FullCover> witnesses; // gauge-fixed covers attaining the minimum
    unsigned long long covers_examined = 0;
};

// Exhaustive minimum of the coloring count over the gauge-fixed cover space;
// equals the DP color function over full covers. All minimizing covers are
// returned as witnesses in index order, identically for any jobs count.
DpSearchResult dp_color_value(const Graph& g, int m, const SearchOptions& opts = {});

// Serial reference for the search above; the parallel path must match it
// bit for bit.
DpSearchResult dp_color_value_serial(const Graph& g, int m, unsigned long long budget = kDefaultBudget);

// The gauge-fixed covers whose count equals target, in index order.
std::vector<FullCover> covers_achieving(const Graph& g, int m, long long target,
                                        const SearchOptions& opts = {});

// Least m <= m_max with a positive search minimum. Throws CapacityError when
// every m in range still admits a cover with no colorings.
int dp_chromatic_number(const Graph& g, int m_max, const SearchOptions& opts = {});

} // namespace dpcolor

#endif
