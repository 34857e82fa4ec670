#ifndef BCOL_DICHOTOMY_HPP
#define BCOL_DICHOTOMY_HPP

#include "bcol/graph.hpp"
#include "bcol/outcome.hpp"

namespace bcol {

// k = m(G). Walks minimal b-precolorings; for each, tries every proper
// coloring of the remaining degree->=k vertices (ascending vertices, colors
// ascending) and greedy-extends the first proper union.
SolveOutcome solve_k_eq_m(const Graph& g, const SolveOptions& opts = {});

// k = Delta(G), requires Delta >= 1. Walks minimal b-precolorings; each one
// is tested with prext_bounded (every uncolored degree <= Delta = k).
SolveOutcome solve_k_eq_delta(const Graph& g, const SolveOptions& opts = {});

// k = m(G)-1, requires m(G) >= 2. Walks minimal b-precolorings; colors the
// remaining degree->=k+1 vertices every proper way, then runs prext_bounded.
SolveOutcome solve_k_eq_m_minus_1(const Graph& g,
                                  const SolveOptions& opts = {});

}  // namespace bcol

#endif
