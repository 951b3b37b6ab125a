#ifndef DPCOLOR_PERM_HPP
#define DPCOLOR_PERM_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "dpcolor/errors.hpp"

namespace dpcolor {

// A permutation of {0,...,m-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

inline Perm identity_perm(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool is_permutation_vector(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline bool is_identity(const Perm& p) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] != i) return false;
    return true;
}

inline Perm inverse_perm(const Perm& p) {
    Perm q(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
    return q;
}

// compose(f, g)[i] = f(g(i)): apply g first, then f.
inline Perm compose(const Perm& f, const Perm& g) {
    if (f.size() != g.size()) throw ParameterError("compose: size mismatch");
    Perm r(f.size());
    for (int i = 0; i < static_cast<int>(g.size()); ++i) r[i] = f[g[i]];
    return r;
}

inline int fixed_points(const Perm& p) {
    int f = 0;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        if (p[i] == i) ++f;
    return f;
}

// All permutations of {0,...,m-1} in lexicographic one-line order.
inline std::vector<Perm> all_permutations(int m) {
    std::vector<Perm> out;
    Perm p = identity_perm(m);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline unsigned long long factorial(int m) {
    unsigned long long f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

} // namespace dpcolor

#endif
