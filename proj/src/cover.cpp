// Full covers as per-edge permutations: coloring counts, gauge transforms,
// canonical-labeling detection and two-path classification.

#include "dpcolor/cover.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dpcolor {

Perm FullCover::oriented(int from, int to) const {
    int idx = graph.edge_index(from, to);
    if (idx < 0) throw ParameterError("oriented: not an edge");
    return from < to ? sigma[idx] : inverse_perm(sigma[idx]);
}

void validate_cover(const FullCover& h) {
    if (h.m < 1) throw ParameterError("cover fold count must be >= 1");
    if (h.m > kMaxFold) throw ParameterError("cover fold count exceeds supported maximum");
    if (h.sigma.size() != h.graph.edges.size())
        throw ParameterError("cover must carry exactly one permutation per edge");
    for (const Perm& p : h.sigma)
        if (static_cast<int>(p.size()) != h.m || !is_permutation_vector(p))
            throw ParameterError("edge permutation is not a bijection on [m]");
}

FullCover identity_cover(const Graph& g, int m) {
    FullCover h{g, m, std::vector<Perm>(g.edges.size(), identity_perm(m))};
    validate_cover(h);
    return h;
}

bool is_valid_coloring(const FullCover& h, const ColoringAssignment& a) {
    if (static_cast<int>(a.size()) != h.graph.n) return false;
    for (int v : a)
        if (v < 0 || v >= h.m) return false;
    for (std::size_t e = 0; e < h.graph.edges.size(); ++e) {
        auto [u, v] = h.graph.edges[e];
        if (h.sigma[e][a[u]] == a[v]) return false;
    }
    return true;
}

std::vector<ColoringAssignment> enumerate_colorings(const FullCover& h) {
    validate_cover(h);
    std::vector<ColoringAssignment> out;
    ColoringAssignment a(h.graph.n, 0);
    for (;;) {
        if (is_valid_coloring(h, a)) out.push_back(a);
        int i = h.graph.n - 1;
        while (i >= 0 && a[i] == h.m - 1) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return out;
}

CountingPlan make_counting_plan(const Graph& g) {
    CountingPlan plan;
    plan.n = g.n;
    std::vector<bool> seen(g.n, false);
    std::vector<int> pos_of(g.n, -1);

    // Breadth-first from a maximum-degree vertex, repeated per component.
    for (;;) {
        int start = -1;
        for (int v = 0; v < g.n; ++v)
            if (!seen[v] && (start < 0 || g.degree(v) > g.degree(start))) start = v;
        if (start < 0) break;
        seen[start] = true;
        std::deque<int> q{start};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            pos_of[v] = static_cast<int>(plan.order.size());
            plan.order.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push_back(w);
                }
        }
    }

    plan.backs.resize(g.n);
    for (int p = 0; p < g.n; ++p) {
        int v = plan.order[p];
        for (int w : g.adj[v]) {
            if (pos_of[w] > p) continue;
            int e = g.edge_index(v, w);
            plan.backs[p].push_back({pos_of[w], e, w < v});
        }
    }
    return plan;
}

long long count_with_plan(const CountingPlan& plan, const FullCover& h, CountScratch& scratch,
                          const std::vector<std::pair<int, int>>& pins) {
    const int m = h.m;
    const auto ecount = h.sigma.size();
    scratch.fwd.resize(ecount);
    scratch.inv.resize(ecount);
    scratch.vals.assign(plan.n, 0);
    for (std::size_t e = 0; e < ecount; ++e)
        for (int i = 0; i < m; ++i) {
            scratch.fwd[e][i] = static_cast<std::uint8_t>(h.sigma[e][i]);
            scratch.inv[e][h.sigma[e][i]] = static_cast<std::uint8_t>(i);
        }

    const std::uint32_t full = m >= 32 ? ~0u : (1u << m) - 1;
    scratch.pin_mask.assign(plan.n, full);
    for (auto [v, idx] : pins) {
        if (v < 0 || v >= plan.n || idx < 0 || idx >= m)
            throw ParameterError("pin out of range");
        int p = static_cast<int>(std::find(plan.order.begin(), plan.order.end(), v) -
                                 plan.order.begin());
        scratch.pin_mask[p] &= 1u << idx;
    }

    auto rec = [&](auto&& self, int p) -> long long {
        if (p == plan.n) return 1;
        std::uint32_t allowed = scratch.pin_mask[p];
        for (const auto& b : plan.backs[p]) {
            int val = scratch.vals[b.pos];
            int forb = b.forward ? scratch.fwd[b.edge][val] : scratch.inv[b.edge][val];
            allowed &= ~(1u << forb);
        }
        long long total = 0;
        while (allowed) {
            int c = __builtin_ctz(allowed);
            allowed &= allowed - 1;
            scratch.vals[p] = c;
            total += self(self, p + 1);
        }
        return total;
    };
    return rec(rec, 0);
}

long long count_colorings(const FullCover& h) {
    validate_cover(h);
    CountingPlan plan = make_counting_plan(h.graph);
    CountScratch scratch;
    return count_with_plan(plan, h, scratch);
}

long long count_colorings_reference(const FullCover& h) {
    validate_cover(h);
    long long total = 0;
    ColoringAssignment a(h.graph.n, 0);
    for (;;) {
        if (is_valid_coloring(h, a)) ++total;
        int i = h.graph.n - 1;
        while (i >= 0 && a[i] == h.m - 1) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return total;
}

long long count_colorings_pinned(const FullCover& h,
                                 const std::vector<std::pair<int, int>>& pins) {
    validate_cover(h);
    CountingPlan plan = make_counting_plan(h.graph);
    CountScratch scratch;
    return count_with_plan(plan, h, scratch, pins);
}

GaugeRelabeling identity_relabeling(int n, int m) {
    return GaugeRelabeling{std::vector<Perm>(n, identity_perm(m))};
}

GaugeRelabeling inverse_relabeling(const GaugeRelabeling& pi) {
    GaugeRelabeling out;
    out.pi.reserve(pi.pi.size());
    for (const Perm& p : pi.pi) out.pi.push_back(inverse_perm(p));
    return out;
}

FullCover apply_gauge(const FullCover& h, const GaugeRelabeling& pi) {
    if (static_cast<int>(pi.pi.size()) != h.graph.n)
        throw ParameterError("relabeling needs one permutation per vertex");
    for (const Perm& p : pi.pi)
        if (static_cast<int>(p.size()) != h.m || !is_permutation_vector(p))
            throw ParameterError("relabeling entry is not a bijection on [m]");
    FullCover out = h;
    for (std::size_t e = 0; e < h.sigma.size(); ++e) {
        auto [u, v] = h.graph.edges[e];
        out.sigma[e] = compose(compose(pi.pi[v], h.sigma[e]), inverse_perm(pi.pi[u]));
    }
    return out;
}

std::pair<FullCover, GaugeRelabeling> gauge_normalize(
    const FullCover& h, const std::vector<std::pair<int, int>>& forest) {
    const Graph& g = h.graph;
    std::vector<std::vector<int>> fadj(g.n);
    for (auto [u, v] : forest) {
        if (g.edge_index(u, v) < 0) throw ParameterError("forest edge is not a graph edge");
        fadj[u].push_back(v);
        fadj[v].push_back(u);
    }
    // Acyclicity via union-find.
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : forest) {
        int a = find(u), b = find(v);
        if (a == b) throw ParameterError("forest edges contain a cycle");
        parent[a] = b;
    }

    GaugeRelabeling pi{std::vector<Perm>(g.n)};
    std::vector<bool> done(g.n, false);
    for (int root = 0; root < g.n; ++root) {
        if (done[root]) continue;
        pi.pi[root] = identity_perm(h.m);
        done[root] = true;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : fadj[v]) {
                if (done[w]) continue;
                // Require pi_w o sigma_{v->w} o pi_v^{-1} = id.
                pi.pi[w] = compose(pi.pi[v], inverse_perm(h.oriented(v, w)));
                done[w] = true;
                q.push_back(w);
            }
        }
    }
    return {apply_gauge(h, pi), pi};
}

std::optional<GaugeRelabeling> find_canonical_labeling(const FullCover& h) {
    auto forest = spanning_forest(h.graph);
    auto [norm, pi] = gauge_normalize(h, forest);
    for (const Perm& p : norm.sigma)
        if (!is_identity(p)) return std::nullopt;
    return pi;
}

std::array<int, 5> classify_two_path(const FullCover& h, int a1, int a2, int a3) {
    const Graph& g = h.graph;
    if (a1 == a2 || a2 == a3 || a1 == a3) throw ParameterError("path vertices must be distinct");
    int e1 = g.edge_index(a1, a2), e2 = g.edge_index(a2, a3);
    if (e1 < 0 || e2 < 0) throw ParameterError("a1-a2-a3 must be a path in the graph");
    if (g.has_edge(a1, a3)) throw ParameterError("a1 and a3 must be nonadjacent");
    for (std::size_t e = 0; e < h.sigma.size(); ++e)
        if (static_cast<int>(e) != e1 && static_cast<int>(e) != e2 && !is_identity(h.sigma[e]))
            throw NormalizationError("cover must carry the identity off the two path edges");

    Perm first = h.oriented(a1, a2), second = h.oriented(a2, a3);
    std::array<int, 5> counts{};
    for (int i = 0; i < h.m; ++i) {
        int j = first[i], k = second[j];
        if (i == j && j == k) ++counts[0];
        else if (i == j) ++counts[1];
        else if (j == k) ++counts[2];
        else if (i == k) ++counts[3];
        else ++counts[4];
    }
    return counts;
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

FullCover read_cover(const Graph& g, std::istream& in) {
    std::istringstream ss(strip_comments(in));
    long long m;
    if (!(ss >> m)) throw ParseError("cover file: missing fold count");
    if (m < 1 || m > kMaxFold) throw ParseError("cover file: fold count out of range");
    FullCover h{g, static_cast<int>(m), std::vector<Perm>(g.edges.size())};
    std::vector<bool> have(g.edges.size(), false);
    for (std::size_t line = 0; line < g.edges.size(); ++line) {
        long long u, v;
        if (!(ss >> u >> v))
            throw ParseError("cover file: expected one line per graph edge (" +
                             std::to_string(g.edges.size()) + " total)");
        int idx = (u >= 0 && v >= 0 && u < g.n && v < g.n)
                      ? g.edge_index(static_cast<int>(u), static_cast<int>(v))
                      : -1;
        if (idx < 0)
            throw ParseError("cover file: (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not a graph edge");
        if (have[idx]) throw ParseError("cover file: duplicate edge line");
        have[idx] = true;
        Perm p(m);
        for (long long i = 0; i < m; ++i) {
            long long x;
            if (!(ss >> x)) throw ParseError("cover file: truncated permutation");
            if (x < 0 || x >= m) throw ParseError("cover file: permutation entry out of range");
            p[i] = static_cast<int>(x);
        }
        if (!is_permutation_vector(p)) throw ParseError("cover file: row is not a permutation");
        h.sigma[idx] = std::move(p);
    }
    std::string extra;
    if (ss >> extra) throw ParseError("cover file: trailing content '" + extra + "'");
    return h;
}

FullCover read_cover_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open cover file: " + path);
    return read_cover(g, in);
}

void write_cover(std::ostream& out, const FullCover& h) {
    out << h.m << '\n';
    for (std::size_t e = 0; e < h.graph.edges.size(); ++e) {
        out << h.graph.edges[e].first << ' ' << h.graph.edges[e].second;
        for (int x : h.sigma[e]) out << ' ' << x;
        out << '\n';
    }
}

} // namespace dpcolor
