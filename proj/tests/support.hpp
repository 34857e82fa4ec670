#ifndef BCOL_TESTS_SUPPORT_HPP
#define BCOL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"

namespace test_support {

// Backtracking proper 3-edge-coloring; result indexed as g.edges().
inline std::optional<std::vector<int>> three_edge_coloring(const bcol::Graph& g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> col(m, 0);
  std::function<bool(int)> rec = [&](int j) {
    if (j == m) return true;
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (int j2 = 0; j2 < j && ok; ++j2) {
        if (col[j2] != c) continue;
        auto [a, b] = edges[j];
        auto [x, y] = edges[j2];
        if (a == x || a == y || b == x || b == y) ok = false;
      }
      if (!ok) continue;
      col[j] = c;
      if (rec(j + 1)) return true;
      col[j] = 0;
    }
    return false;
  };
  if (rec(0)) return col;
  return std::nullopt;
}

// Minimality against every proper subset of the domain, not just
// single-vertex removals. Exponential; keep domains small.
inline bool minimal_by_full_subsets(const bcol::Graph& g,
                                    const bcol::Precoloring& p) {
  if (!bcol::is_b_precoloring(g, p)) return false;
  const std::vector<int> dom = p.domain();
  const int d = static_cast<int>(dom.size());
  for (int mask = 0; mask + 1 < (1 << d); ++mask) {
    bcol::Precoloring q(p.k(), p.size());
    for (int i = 0; i < d; ++i)
      if (mask >> i & 1) q.assign(dom[i], p.color(dom[i]));
    if (bcol::is_b_precoloring(g, q)) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> raw_set(
    const std::vector<bcol::Precoloring>& v) {
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const bcol::Precoloring& p : v) out.push_back(p.raw());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace test_support

#endif
