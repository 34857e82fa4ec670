#include "bcol/solver_api.hpp"

#include <stdexcept>

#include "bcol/dichotomy.hpp"
#include "bcol/exact.hpp"
#include "bcol/fpt.hpp"

namespace bcol {

std::string select_algorithm(const Graph& g, int k) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("select_algorithm: empty graph");
  if (k < 1) throw std::invalid_argument("select_algorithm: k must be >= 1");
  const DegreeStats ds = degree_stats(g);
  if (k == ds.m_degree) return "m";
  if (k == ds.delta) return "delta";
  if (k == ds.m_degree - 1) return "m-minus-1";
  if (k == ds.delta + 1 || ell_k(g, k) <= k) return "fpt-delta";
  return "fpt-ell";
}

SolveOutcome solve_with_algorithm(const Graph& g, int k,
                                  const std::string& algorithm,
                                  const SolveOptions& opts) {
  if (k < 1)
    throw std::invalid_argument("solve_with_algorithm: k must be >= 1");
  const std::string algo =
      algorithm == "auto" ? select_algorithm(g, k) : algorithm;
  if (algo == "m" || algo == "delta" || algo == "m-minus-1") {
    const DegreeStats ds = degree_stats(g);
    const int designated = algo == "m"       ? ds.m_degree
                           : algo == "delta" ? ds.delta
                                             : ds.m_degree - 1;
    if (k != designated)
      throw std::invalid_argument("solver \"" + algo + "\" is for k = " +
                                  std::to_string(designated) +
                                  " on this graph, got k = " +
                                  std::to_string(k));
    if (algo == "m") return solve_k_eq_m(g, opts);
    if (algo == "delta") return solve_k_eq_delta(g, opts);
    return solve_k_eq_m_minus_1(g, opts);
  }
  if (algo == "fpt-delta") return solve_m_param_delta(g, k, opts);
  if (algo == "fpt-ell") return solve_delta_ell(g, k, opts);
  if (algo == "exact") return solve_exact(g, k, opts);
  throw std::invalid_argument("unknown algorithm \"" + algorithm + "\"");
}

}  // namespace bcol
