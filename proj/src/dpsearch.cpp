// Gauge-reduced exhaustive search over full covers. The sweep over co-tree
// permutation assignments is the hot loop: an OpenMP variant splits the index
// space into contiguous blocks and must reproduce the serial result exactly.

#include "dpcolor/dpsearch.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace dpcolor {

CoverSpace::CoverSpace(const Graph& g, int m, unsigned long long budget) : g_(g), m_(m) {
    if (m < 1 || m > kMaxFold) throw ParameterError("fold count out of range");
    tree_ = spanning_tree(g); // throws on disconnected input
    std::vector<bool> in_tree(g.edges.size(), false);
    for (auto [u, v] : tree_) in_tree[g.edge_index(u, v)] = true;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (!in_tree[e]) cotree_.push_back(static_cast<int>(e));

    perms_ = all_permutations(m);
    const unsigned long fact = static_cast<unsigned long>(perms_.size());
    mpz_class total = 1;
    for (std::size_t i = 0; i < cotree_.size(); ++i) total *= fact;
    if (total > mpz_class(std::to_string(budget)))
        throw CapacityError("cover enumeration needs " + total.get_str() +
                            " covers, over the budget of " + std::to_string(budget));
    size_ = total.get_ui();
}

void CoverSpace::ranks_at(unsigned long long index, std::vector<int>& out) const {
    out.assign(cotree_.size(), 0);
    const unsigned long long fact = perms_.size();
    for (std::size_t i = cotree_.size(); i-- > 0;) {
        out[i] = static_cast<int>(index % fact);
        index /= fact;
    }
}

FullCover CoverSpace::cover_at(unsigned long long index) const {
    if (index >= size_) throw ParameterError("cover index out of range");
    FullCover h = identity_cover(g_, m_);
    std::vector<int> ranks;
    ranks_at(index, ranks);
    for (std::size_t i = 0; i < cotree_.size(); ++i) h.sigma[cotree_[i]] = perms_[ranks[i]];
    return h;
}

namespace {

// Stateful sweep kernel: walks a contiguous index block with an odometer over
// co-tree permutation ranks, updating only the digits that change.
class BlockSweep {
 public:
    BlockSweep(const CoverSpace& space, const CountingPlan& plan)
        : space_(space), plan_(plan), cover_(identity_cover(space.graph(), space.fold())) {}

    template <typename Visit>
    void run(unsigned long long lo, unsigned long long hi, Visit&& visit) {
        if (lo >= hi) return;
        space_.ranks_at(lo, ranks_);
        for (std::size_t i = 0; i < ranks_.size(); ++i) apply_digit(i);
        for (unsigned long long idx = lo; idx < hi; ++idx) {
            long long c = count_with_plan(plan_, cover_, scratch_);
            visit(idx, c);
            if (idx + 1 < hi) advance();
        }
    }

 private:
    void apply_digit(std::size_t i) {
        cover_.sigma[space_.cotree_edges()[i]] = space_.permutations()[ranks_[i]];
    }

    void advance() {
        const int fact = static_cast<int>(space_.permutations().size());
        std::size_t i = ranks_.size();
        while (i-- > 0) {
            if (++ranks_[i] < fact) {
                apply_digit(i);
                return;
            }
            ranks_[i] = 0;
            apply_digit(i);
        }
    }

    const CoverSpace& space_;
    const CountingPlan& plan_;
    FullCover cover_;
    std::vector<int> ranks_;
    CountScratch scratch_;
};

struct BlockResult {
    long long min = 0;
    bool any = false;
    std::vector<unsigned long long> min_indices;
};

BlockResult sweep_min_block(const CoverSpace& space, const CountingPlan& plan,
                            unsigned long long lo, unsigned long long hi) {
    BlockResult r;
    BlockSweep sweep(space, plan);
    sweep.run(lo, hi, [&](unsigned long long idx, long long c) {
        if (!r.any || c < r.min) {
            r.min = c;
            r.any = true;
            r.min_indices.clear();
        }
        if (c == r.min) r.min_indices.push_back(idx);
    });
    return r;
}

DpSearchResult assemble(const CoverSpace& space, int m, long long min,
                        const std::vector<unsigned long long>& indices) {
    DpSearchResult res;
    res.m = m;
    res.min_count = min;
    res.covers_examined = space.size();
    res.witnesses.reserve(indices.size());
    for (auto idx : indices) res.witnesses.push_back(space.cover_at(idx));
    return res;
}

} // namespace

void sweep_cover_counts_serial(const CoverSpace& space,
                               const std::function<void(unsigned long long, long long)>& visit) {
    CountingPlan plan = make_counting_plan(space.graph());
    BlockSweep sweep(space, plan);
    sweep.run(0, space.size(), visit);
}

DpSearchResult dp_color_value_serial(const Graph& g, int m, unsigned long long budget) {
    CoverSpace space(g, m, budget);
    CountingPlan plan = make_counting_plan(g);
    BlockResult r = sweep_min_block(space, plan, 0, space.size());
    return assemble(space, m, r.min, r.min_indices);
}

DpSearchResult dp_color_value(const Graph& g, int m, const SearchOptions& opts) {
    if (opts.jobs <= 1) return dp_color_value_serial(g, m, opts.budget);

    CoverSpace space(g, m, opts.budget);
    CountingPlan plan = make_counting_plan(g);
    const unsigned long long total = space.size();
    const int jobs = static_cast<int>(std::min<unsigned long long>(
        static_cast<unsigned long long>(std::max(1, opts.jobs)), total));
    std::vector<BlockResult> parts(jobs);

#pragma omp parallel for schedule(static, 1) num_threads(jobs)
    for (int t = 0; t < jobs; ++t) {
        unsigned long long lo = total / jobs * t + std::min<unsigned long long>(t, total % jobs);
        unsigned long long hi =
            total / jobs * (t + 1) + std::min<unsigned long long>(t + 1, total % jobs);
        parts[t] = sweep_min_block(space, plan, lo, hi);
    }

    long long best = 0;
    bool any = false;
    for (const auto& p : parts)
        if (p.any && (!any || p.min < best)) {
            best = p.min;
            any = true;
        }
    std::vector<unsigned long long> indices;
    for (const auto& p : parts)
        if (p.any && p.min == best)
            indices.insert(indices.end(), p.min_indices.begin(), p.min_indices.end());
    return assemble(space, m, best, indices);
}

std::vector<FullCover> covers_achieving(const Graph& g, int m, long long target,
                                        const SearchOptions& opts) {
    CoverSpace space(g, m, opts.budget);
    CountingPlan plan = make_counting_plan(g);
    const unsigned long long total = space.size();
    const int jobs = static_cast<int>(std::min<unsigned long long>(
        static_cast<unsigned long long>(std::max(1, opts.jobs)), total));
    std::vector<std::vector<unsigned long long>> hits(jobs);

#pragma omp parallel for schedule(static, 1) num_threads(jobs)
    for (int t = 0; t < jobs; ++t) {
        unsigned long long lo = total / jobs * t + std::min<unsigned long long>(t, total % jobs);
        unsigned long long hi =
            total / jobs * (t + 1) + std::min<unsigned long long>(t + 1, total % jobs);
        BlockSweep sweep(space, plan);
        sweep.run(lo, hi, [&](unsigned long long idx, long long c) {
            if (c == target) hits[t].push_back(idx);
        });
    }

    std::vector<FullCover> out;
    for (const auto& part : hits)
        for (auto idx : part) out.push_back(space.cover_at(idx));
    return out;
}

int dp_chromatic_number(const Graph& g, int m_max, const SearchOptions& opts) {
    if (m_max < 1) throw ParameterError("dp_chromatic_number needs m_max >= 1");
    for (int m = 1; m <= m_max; ++m) {
        CoverSpace space(g, m, opts.budget);
        CountingPlan plan = make_counting_plan(g);
        // Only the sign of the minimum matters here, so stop at the first
        // cover with no colorings.
        bool zero = false;
        BlockSweep sweep(space, plan);
        unsigned long long lo = 0, total = space.size();
        while (lo < total && !zero) {
            unsigned long long hi = std::min(total, lo + 4096);
            sweep.run(lo, hi, [&](unsigned long long, long long c) {
                if (c == 0) zero = true;
            });
            lo = hi;
        }
        if (!zero) return m;
    }
    throw CapacityError("no m <= " + std::to_string(m_max) +
                        " makes every cover colorable; raise m_max");
}

} // namespace dpcolor
