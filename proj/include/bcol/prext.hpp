#ifndef BCOL_PREXT_HPP
#define BCOL_PREXT_HPP

#include <optional>
#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"
#include "bcol/outcome.hpp"

namespace bcol {

struct PrextInstance {
  Graph graph;
  int k = 0;
  Precoloring precoloring;
};

// Greedy extension; requires every uncolored vertex to have degree <= k-1
// (throws otherwise). Absent iff the precoloring is improper.
std::optional<std::vector<int>> prext_greedy(const PrextInstance& inst);
std::optional<std::vector<int>> prext_greedy(const Graph& g, int k,
                                             const Precoloring& p);

// (G - X) plus one pendant per (colored x, uncolored neighbor y of x), the
// pendant carrying x's color and attached only to y. Extension-equivalent to
// the input instance.
struct PendantReduction {
  bool already_infeasible = false;  // input precoloring was improper
  PrextInstance instance;
  // instance vertex -> input vertex it derives from (kept vertices map to
  // themselves, pendants to the colored vertex they replicate)
  std::vector<int> origin;
  std::vector<int> kept;  // input vertices surviving into the instance, ascending
};

PendantReduction pendant_reduction(const PrextInstance& inst);
PendantReduction pendant_reduction(const Graph& g, int k, const Precoloring& p);

// Complete PrExt decision + witness when every uncolored vertex has degree
// <= k in G (throws otherwise). Pendant reduction, then exact list coloring
// per component of the uncolored subgraph, with a constructive shortcut for
// components carrying degree-choosability slack.
std::optional<std::vector<int>> prext_bounded(const PrextInstance& inst,
                                              Budget* budget = nullptr);
std::optional<std::vector<int>> prext_bounded(const Graph& g, int k,
                                              const Precoloring& p,
                                              Budget* budget = nullptr);

// General exact PrExt: backtracking with forward checking, no degree
// precondition. Variable order: smallest remaining list, ties by index;
// colors ascending.
std::optional<std::vector<int>> prext_exact(const PrextInstance& inst,
                                            Budget* budget = nullptr);
std::optional<std::vector<int>> prext_exact(const Graph& g, int k,
                                            const Precoloring& p,
                                            Budget* budget = nullptr);

}  // namespace bcol

#endif
