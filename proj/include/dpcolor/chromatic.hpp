#ifndef DPCOLOR_CHROMATIC_HPP
#define DPCOLOR_CHROMATIC_HPP

#include <gmpxx.h>

#include <vector>

#include "dpcolor/graph.hpp"
#include "dpcolor/polynomial.hpp"

namespace dpcolor {

// Practical cap for deletion-contraction.
inline constexpr int kMaxChromaticVertices = 12;

// Exact chromatic polynomial by deletion-contraction, memoized on canonical
// forms of the intermediate graphs. Degree n, leading coefficient 1.
IntPolynomial chromatic_polynomial(const Graph& g);

// Closed forms for proper-coloring counts of named families:
//   wheel:     params {n}, n >= 3 rim vertices     m((m-2)^n + (-1)^n (m-2))
//   unicyclic: params {n, i}, cycle length 3<=i<=n (m-1)^n + (-1)^i (m-1)^{n-i+1}
//   cycle:     params {n}, n >= 3                  (m-1)^n + (-1)^n (m-1)
//   theta:     params {r, s, t}                    six-term sum divided by m
//   tree:      params {n}, n >= 1                  m(m-1)^{n-1}
// The theta numerator must be divisible by m; a failed division throws
// InternalError.
enum class ClosedFormFamily { wheel, unicyclic, cycle, theta, tree };

mpz_class closed_form(ClosedFormFamily family, const std::vector<int>& params, long m);

} // namespace dpcolor

#endif
