#include "bcol/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace bcol {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  finalize();
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.m_ = static_cast<int>(seen.size());
  g.finalize();
  return g;
}

void Graph::finalize() {
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  bits_.clear();
  if (n_ > 0 && n_ <= 64) {
    bits_.assign(n_, 0);
    for (int v = 0; v < n_; ++v)
      for (int w : adj_[v]) bits_[v] |= std::uint64_t{1} << w;
  }
}

bool Graph::adjacent(int u, int v) const {
  if (!bits_.empty()) return (bits_[u] >> v) & 1u;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("degree_stats: empty graph");
  DegreeStats s;
  std::vector<int> degs(n);
  for (int v = 0; v < n; ++v) {
    degs[v] = g.degree(v);
    s.delta = std::max(s.delta, degs[v]);
  }
  s.degree_histogram.assign(s.delta + 1, 0);
  for (int v = 0; v < n; ++v) ++s.degree_histogram[degs[v]];
  std::sort(degs.rbegin(), degs.rend());
  // m(G): largest i such that at least i vertices have degree >= i-1.
  for (int i = 1; i <= n; ++i)
    if (degs[i - 1] >= i - 1) s.m_degree = i;
  return s;
}

int ell_k(const Graph& g, int k) {
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= k) ++count;
  return count;
}

std::optional<int> bfs_distance(const Graph& g, int from, int to) {
  const int n = g.vertex_count();
  if (from < 0 || from >= n || to < 0 || to >= n)
    throw std::invalid_argument("bfs_distance: vertex out of range");
  if (from == to) return 0;
  std::vector<int> dist(n, -1);
  dist[from] = 0;
  std::queue<int> q;
  q.push(from);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1) continue;
      dist[w] = dist[u] + 1;
      if (w == to) return dist[w];
      q.push(w);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> induced_components(const Graph& g,
                                                 const std::vector<int>& subset) {
  const int n = g.vertex_count();
  std::vector<char> in(n, 0), seen(n, 0);
  for (int v : subset) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("induced_components: vertex out of range");
    in[v] = 1;
  }
  std::vector<int> ordered;
  for (int v = 0; v < n; ++v)
    if (in[v]) ordered.push_back(v);

  std::vector<std::vector<int>> comps;
  for (int v : ordered) {
    if (seen[v]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    seen[v] = 1;
    q.push(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (!in[w] || seen[w]) continue;
        seen[w] = 1;
        q.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

DTRPartition partition_dtr(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("partition_dtr: k must be >= 1");
  DTRPartition p;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    if (d >= k)
      p.d_set.push_back(v);
    else if (d == k - 1)
      p.t_set.push_back(v);
    else
      p.r_set.push_back(v);
  }
  return p;
}

}  // namespace bcol
