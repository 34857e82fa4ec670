#ifndef BCOL_SOLVER_API_HPP
#define BCOL_SOLVER_API_HPP

#include <string>

#include "bcol/graph.hpp"
#include "bcol/outcome.hpp"

namespace bcol {

// Routing for "does G have a b-coloring with k colors". Returns one of
// "m", "delta", "m-minus-1", "fpt-delta", "fpt-ell", checked in that order:
// k = m(G), k = Delta(G), k = m(G)-1, then k = Delta(G)+1 or ell_k <= k,
// otherwise the ell-parameterized route. Requires n >= 1 and k >= 1.
std::string select_algorithm(const Graph& g, int k);

// Dispatches to the named solver ("auto" routes via select_algorithm;
// "exact" is always legal). Throws std::invalid_argument when the tag is
// unknown or k conflicts with the solver's designated value (e.g. "m" with
// k != m(G)).
SolveOutcome solve_with_algorithm(const Graph& g, int k,
                                  const std::string& algorithm,
                                  const SolveOptions& opts = {});

}  // namespace bcol

#endif
