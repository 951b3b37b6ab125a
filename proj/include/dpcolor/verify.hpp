#ifndef DPCOLOR_VERIFY_HPP
#define DPCOLOR_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/dpsearch.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

// One checked claim: expected and computed values as text plus a verdict.
struct CheckInstance {
    std::string name; // no whitespace, so records stay line-oriented
    std::string claim;
    std::string computed;
    bool pass = false;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckInstance> instances;
    double runtime_seconds = 0.0;

    bool overall() const;
    std::size_t failure_count() const;
};

// Human-readable; runtime printed as a trailing comment unless suppressed.
void write_text(std::ostream& out, const CheckReport& report, bool with_runtime = true);
// Machine-readable key=value lines; byte-identical across runs and jobs counts.
void write_records(std::ostream& out, const CheckReport& report);

// Upper bounds for chromatic polynomials of connected and 2-connected graphs,
// with equality characterizations (trees; cycles and K(2,3) at n=5, m=3).
CheckReport check_chromatic_bounds(int n_max = 6, int m_max = 5, int jobs = 1);

// Trees attain m(m-1)^{n-1} as a search minimum; connected non-trees stay
// strictly below it, positively so from the DP chromatic number onward.
CheckReport check_tree_bound(int tree_n_max = 6, int nontree_n_max = 5, int m_max = 4,
                             unsigned long long budget = kDefaultBudget, int jobs = 1);

// Exact averages over all matchings for edge addition, pendant-vertex
// attachment and ear addition on randomized small instances.
CheckReport check_expectation_identities(int trials = 40, unsigned long seed = 0, int jobs = 1);

// Search minima for cycles against their closed forms.
CheckReport check_cycle_dp(int n_max = 7, int m_max = 4,
                           unsigned long long budget = kDefaultBudget, int jobs = 1);

// Cycle-based upper bounds for 2-connected graphs, every cycle as the base,
// with equality exactly for the cycles themselves.
CheckReport check_two_connected_bounds(int n_max = 5, int m_max = 4,
                                       unsigned long long budget = kDefaultBudget, int jobs = 1);

// Pinned-count identities for one graph, edge and fold count.
CheckReport check_pinned_lemma(const Graph& g, std::pair<int, int> e, int m);
// The same identities for every edge of every connected graph up to n_max.
CheckReport check_pinned_sweep(int n_max = 5, int m_max = 4, int jobs = 1);

// Two-path decomposition identities on a theta graph: per-cover counts from
// the five case quantities, and the minimum from their maximum.
CheckReport check_two_path_lemma(int r, int s, int t, int m);
CheckReport check_two_path_sweep(int m = 3, int jobs = 1);

// Count equals the chromatic value iff the cover has a canonical labeling,
// for unicyclic graphs (m = 2, 3) and theta graphs (m = 3; theta(1,2,2) also
// at m = 4).
CheckReport check_canonical_theorems(int unicyclic_n_max = 6, int theta_sum_max = 7, int jobs = 1);

// Wheel examples: covers of W_4 attaining the chromatic value at m = 3 and
// m = 4 that have no canonical labeling. Witness covers are returned for
// emission in the cover text format.
struct W4Report {
    CheckReport report;
    std::vector<FullCover> witnesses;
};
W4Report reproduce_w4_examples(unsigned long long budget = kDefaultBudget, int jobs = 1);

// Random (cover, relabeling) pairs preserve counts; inverses round-trip.
CheckReport check_gauge_invariance(int pairs = 1000, unsigned long seed = 0, int jobs = 1);

// Every cover of a cycle counts (m-1)^n + (-1)^n (f-1), f the number of fixed
// points of its holonomy; checked against both counting kernels.
CheckReport check_cycle_twist_law(int n_max = 6, int m_max = 4, int jobs = 1);

// Family closed forms agree with deletion-contraction at every m in 0..m_max.
CheckReport check_closed_forms(int n_max = 8, int m_max = 6, int jobs = 1);

} // namespace dpcolor

#endif
