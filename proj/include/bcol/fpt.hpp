#ifndef BCOL_FPT_HPP
#define BCOL_FPT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"
#include "bcol/outcome.hpp"

namespace bcol {

struct ReductionResult {
  Graph graph;
  std::vector<int> removed;     // original ids, in removal order
  std::vector<int> orig_index;  // reduced vertex -> original id, ascending
};

// Repeatedly deletes any vertex whose closed neighborhood consists of
// vertices of degree <= k-2, rescanning from vertex 0 after each removal.
// Answer-preserving for b-coloring with k colors. Requires k >= 2.
ReductionResult apply_reduction_rule(const Graph& g, int k);

struct ScatterSet {
  std::vector<int> members;
  int min_pairwise_distance = 0;
};

// Greedy over candidates in ascending order: keep a vertex iff its distance
// to every member already chosen is >= min_dist. Maximal by construction.
// Requires min_dist >= 1.
ScatterSet scattered_set(const Graph& g, const std::vector<int>& candidates,
                         int min_dist);

// Injective coloring of d_set avoiding, for each member, the color of its
// unique neighbor in bprime (bprime[i] carries color i+1), via augmenting-path
// matching between vertices and colors. Throws std::logic_error if some
// member has two bprime neighbors; absent iff no valid assignment exists.
std::optional<Precoloring> color_d_injective(const Graph& g,
                                             const std::vector<int>& d_set,
                                             const std::vector<int>& bprime,
                                             int k);

struct RecolorOutcome {
  enum class Kind { kInternalBVertex, kInjectiveNeighborhood };
  Kind kind = Kind::kInjectiveNeighborhood;
  int b_vertex = -1;  // set for kInternalBVertex
  std::vector<std::pair<int, int>> coloring;  // (vertex, color), ascending
};

// Rearranges a proper coloring of one component of G[D u B'] so that either
// some component vertex is a b-vertex for color_i, or x_i keeps color_i with
// its closed component neighborhood injectively colored. Repeatedly
// eliminates a color missing around x_i and merges two of x_i's non-adjacent
// neighbors via a virtual edge. Requires start proper on the component and
// deg_G(x_i) == k-1.
RecolorOutcome recolor_component(const Graph& g,
                                 const std::vector<int>& component, int x_i,
                                 int color_i,
                                 const std::vector<std::pair<int, int>>& start,
                                 int k);

// b-coloring with k colors where ell_k(G) <= k (throws otherwise): reduction
// rule, scattered set at distance 4, then either an exact search on the
// bounded Case-1 graph or the direct Case-2 construction.
SolveOutcome solve_m_param_delta(const Graph& g, int k,
                                 const SolveOptions& opts = {});

// b-coloring with k colors for arbitrary ell_k, parameterized by Delta and
// ell_k: dispatches small/trivial regimes, otherwise scatters at distance
// max(ell+2, 4) and runs the Case-1 kernel or the Case-2 recoloring
// construction on G[D u B'].
SolveOutcome solve_delta_ell(const Graph& g, int k,
                             const SolveOptions& opts = {});

enum class KernelMode { kM, kEll };

struct KernelResult {
  bool solved = false;
  SolveOutcome outcome;  // set when solved
  Graph reduced;         // set when not solved
  int k = 0;
  std::uint64_t size_bound = 0;  // explicit Case-1 vertex bound, saturated
};

// Same reduction + case split as the solvers, but Case 1 stops at the bounded
// instance instead of solving it. Mode kM requires ell_k(G) <= k.
KernelResult kernelize(const Graph& g, int k, KernelMode mode,
                       const SolveOptions& opts = {});

}  // namespace bcol

#endif
