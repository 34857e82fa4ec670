#ifndef BCOL_ENUMERATE_HPP
#define BCOL_ENUMERATE_HPP

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"
#include "bcol/outcome.hpp"

namespace bcol {

// n^k * delta^(k(k-1)) * ((k-1)!)^k: upper bound on the number of guesses the
// enumeration makes. Requires k >= 1, n >= 1, delta >= 0.
boost::multiprecision::cpp_int beta_bound(int n, int delta, int k);

// Streams every minimal b-precoloring of (g, k) exactly once (k <= 64).
//
// Order: guesses are ascending b-vertex tuples x_1 < ... < x_k (vertices of
// degree < k-1 skipped), depth-first over positions choosing the neighbor
// subset Z_i and its consistent color bijection with incremental properness
// pruning; each surviving guess is expanded to all k! color relabelings
// (minimality is relabeling-invariant). Outputs are grouped by leading vertex
// x_1 ascending, each group sorted by raw color vector, and duplicates are
// suppressed at first occurrence. jobs > 1 prefetches leading-vertex chunks
// in parallel and merges them in this same order, so the output never depends
// on jobs.
class MinimalBPrecoloringStream {
 public:
  MinimalBPrecoloringStream(const Graph& g, int k, int jobs = 1,
                            Budget* budget = nullptr);

  std::optional<Precoloring> next();

  // Next nonempty deduplicated chunk (all outputs for a batch of leading
  // vertices); false at end of stream. Solvers parallelize per chunk.
  bool next_chunk(std::vector<Precoloring>& out);

 private:
  const Graph& g_;
  int k_;
  int jobs_;
  Budget* budget_;
  int next_x1_ = 0;
  std::vector<Precoloring> buffer_;
  std::size_t buffer_pos_ = 0;
  std::unordered_set<std::string> seen_;
};

// Materialized stream, same order.
std::vector<Precoloring> enumerate_minimal_b_precolorings(
    const Graph& g, int k, int jobs = 1, Budget* budget = nullptr);

}  // namespace bcol

#endif
