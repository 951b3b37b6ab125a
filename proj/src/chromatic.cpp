// Deletion-contraction with memoization on canonical forms, plus exact
// closed-form evaluation for the named families.

#include "dpcolor/chromatic.hpp"

#include <algorithm>
#include <unordered_map>

namespace dpcolor {

namespace {

using Memo = std::unordered_map<GraphKey, IntPolynomial, GraphKeyHash>;

Graph delete_edge(const Graph& g, int u, int v) {
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edges.size() - 1);
    for (auto [a, b] : g.edges)
        if (!(a == std::min(u, v) && b == std::max(u, v))) e.emplace_back(a, b);
    return Graph::from_edges(g.n, std::move(e));
}

// Contract edge (u,v): merge the higher endpoint into the lower, relabel the
// remaining vertices downward and drop parallel edges.
Graph contract_edge(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g.edges) {
        if (a == v) a = u;
        if (b == v) b = u;
        if (a == b) continue;
        if (a > v) --a;
        if (b > v) --b;
        if (a > b) std::swap(a, b);
        e.emplace_back(a, b);
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Graph::from_edges(g.n - 1, std::move(e));
}

std::vector<Graph> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int k = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = k;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v])
                if (comp[w] < 0) {
                    comp[w] = k;
                    stack.push_back(w);
                }
        }
        ++k;
    }
    std::vector<std::vector<int>> verts(k);
    for (int v = 0; v < g.n; ++v) verts[comp[v]].push_back(v);
    std::vector<Graph> out;
    for (const auto& vs : verts) {
        std::vector<int> local(g.n, -1);
        for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> e;
        for (auto [a, b] : g.edges)
            if (local[a] >= 0 && local[b] >= 0) e.emplace_back(local[a], local[b]);
        out.push_back(Graph::from_edges(static_cast<int>(vs.size()), std::move(e)));
    }
    return out;
}

IntPolynomial chrom_rec(const Graph& g, Memo& memo) {
    if (g.edge_count() == 0) return IntPolynomial::monomial(g.n);

    auto comps = components(g);
    if (comps.size() > 1) {
        IntPolynomial p = IntPolynomial::constant(1);
        for (const Graph& c : comps) p = p * chrom_rec(c, memo);
        return p;
    }

    // Connected tree: m(m-1)^{n-1}.
    if (g.edge_count() == g.n - 1)
        return IntPolynomial::monomial(1) * IntPolynomial::shifted_power(-1, g.n - 1);

    GraphKey key = canonical_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Pivot: canonically smallest edge on a shortest cycle.
    auto cyc = shortest_cycle(g);
    std::pair<int, int> pivot{g.n, g.n};
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (a > b) std::swap(a, b);
        pivot = std::min(pivot, {a, b});
    }

    IntPolynomial p = chrom_rec(delete_edge(g, pivot.first, pivot.second), memo) -
                      chrom_rec(contract_edge(g, pivot.first, pivot.second), memo);
    memo.emplace(key, p);
    return p;
}

} // namespace

IntPolynomial chromatic_polynomial(const Graph& g) {
    if (g.n > kMaxChromaticVertices)
        throw CapacityError("chromatic polynomial capped at " +
                            std::to_string(kMaxChromaticVertices) + " vertices, got " +
                            std::to_string(g.n));
    Memo memo;
    return chrom_rec(g, memo);
}

namespace {

mpz_class pow_int(const mpz_class& base, long e) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

mpz_class closed_form(ClosedFormFamily family, const std::vector<int>& params, long m) {
    if (m < 0) throw ParameterError("closed_form needs m >= 0");
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw ParameterError("closed_form: wrong parameter count");
    };
    const mpz_class u = mpz_class(m) - 1;
    switch (family) {
        case ClosedFormFamily::wheel: {
            need(1);
            int n = params[0];
            if (n < 3) throw ParameterError("wheel closed form needs n >= 3");
            mpz_class w = mpz_class(m) - 2;
            return mpz_class(m) * (pow_int(w, n) + sign_pow(n) * w);
        }
        case ClosedFormFamily::unicyclic: {
            need(2);
            int n = params[0], i = params[1];
            if (i < 3 || i > n) throw ParameterError("unicyclic closed form needs 3 <= i <= n");
            return pow_int(u, n) + sign_pow(i) * pow_int(u, n - i + 1);
        }
        case ClosedFormFamily::cycle: {
            need(1);
            int n = params[0];
            if (n < 3) throw ParameterError("cycle closed form needs n >= 3");
            return pow_int(u, n) + sign_pow(n) * u;
        }
        case ClosedFormFamily::theta: {
            need(3);
            int r = params[0], s = params[1], t = params[2];
            int ones = (r == 1) + (s == 1) + (t == 1);
            if (r < 1 || s < 1 || t < 1 || ones > 1)
                throw ParameterError("theta closed form: lengths >= 1 with at most one length-1 path");
            mpz_class num = pow_int(u, r + s + t) + sign_pow(s + t) * pow_int(u, r + 1) +
                            sign_pow(r + t) * pow_int(u, s + 1) + sign_pow(r + s) * pow_int(u, t + 1) +
                            sign_pow(r + s + t) * pow_int(u, 2) + sign_pow(r + s + t + 1) * u;
            if (m == 0) {
                if (num != 0) throw InternalError("theta closed form: nonzero numerator at m = 0");
                return 0;
            }
            mpz_class q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), mpz_class(m).get_mpz_t());
            if (rem != 0) throw InternalError("theta closed form: numerator not divisible by m");
            return q;
        }
        case ClosedFormFamily::tree: {
            need(1);
            int n = params[0];
            if (n < 1) throw ParameterError("tree closed form needs n >= 1");
            return mpz_class(m) * pow_int(u, n - 1);
        }
    }
    throw ParameterError("unknown closed form family");
}

} // namespace dpcolor
