#ifndef BCOL_GRAPH_HPP
#define BCOL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bcol {

// Simple undirected graph with 0-based vertices, immutable after construction.
// Neighbor lists are kept sorted ascending; self-loops are rejected and
// duplicate edges collapse to one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted pairs with u < v

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void finalize();

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> bits_;  // adjacency masks when n <= 64
};

struct DegreeStats {
  int delta = 0;                      // max degree
  int m_degree = 0;                   // largest i with i vertices of degree >= i-1
  std::vector<int> degree_histogram;  // index d -> number of vertices of degree d
};

// Throws std::invalid_argument on the empty graph.
DegreeStats degree_stats(const Graph& g);

// Number of vertices of degree >= k. k may exceed delta (result 0).
int ell_k(const Graph& g, int k);

std::optional<int> bfs_distance(const Graph& g, int from, int to);

// Connected components of the subgraph induced by `subset` (original vertex
// ids, each component sorted ascending, components ordered by smallest member).
std::vector<std::vector<int>> induced_components(const Graph& g,
                                                 const std::vector<int>& subset);

struct DTRPartition {
  std::vector<int> d_set;  // degree >= k
  std::vector<int> t_set;  // degree exactly k-1
  std::vector<int> r_set;  // degree <= k-2
};

DTRPartition partition_dtr(const Graph& g, int k);

}  // namespace bcol

#endif
