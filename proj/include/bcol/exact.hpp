#ifndef BCOL_EXACT_HPP
#define BCOL_EXACT_HPP

#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"
#include "bcol/outcome.hpp"

namespace bcol {

// Decides whether G has a b-coloring with exactly k colors by walking the
// minimal b-precoloring stream and testing each item for proper extension.
// Certificates are verified before being returned.
SolveOutcome solve_exact(const Graph& g, int k, const SolveOptions& opts = {});

// Independent reference: backtracking over total colorings with a b-vertex
// feasibility bound. Intended for small n; use solve_exact otherwise.
SolveOutcome solve_exact_direct(const Graph& g, int k,
                                const SolveOptions& opts = {});

struct BChromaticResult {
  int chi_b = 0;
  BCertificate certificate;
  SolveStats stats;
};

// Largest k admitting a b-coloring: scans k = m(G) downward; guaranteed to
// stop at the chromatic number or above. Throws BudgetExceeded if the budget
// runs out first. Requires n >= 1.
BChromaticResult b_chromatic_number(const Graph& g,
                                    const SolveOptions& opts = {});

// Reference enumerator for cross-checking: all (k+1)^n assignments filtered
// down to minimal b-precolorings. Throws when n exceeds cap.
std::vector<Precoloring> brute_enumerate_minimal_b_precolorings(const Graph& g,
                                                                int k,
                                                                int cap = 8);

}  // namespace bcol

#endif
