#include "bcol/prext.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace bcol {

namespace {

std::uint64_t full_mask(int k) {
  return k >= 64 ? ~0ull : ((1ull << k) - 1);
}

void check_instance(const Graph& g, int k, const Precoloring& p) {
  if (k < 1) throw std::invalid_argument("prext: k must be >= 1");
  if (k > 64) throw std::invalid_argument("prext: only k <= 64 is supported");
  if (p.k() != k) throw std::invalid_argument("prext: precoloring k mismatch");
  if (p.size() != g.vertex_count())
    throw std::invalid_argument("prext: precoloring size mismatch");
}

// Colors one component of the uncolored subgraph in place; colors[v] == 0
// marks uncolored. Lists depend only on colors fixed outside the component,
// so component order does not matter.
bool color_component(const Graph& g, int k, std::vector<int>& colors,
                     const std::vector<int>& comp, Budget* budget) {
  const std::uint64_t full = full_mask(k);
  const int s = static_cast<int>(comp.size());
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < s; ++i) local[comp[i]] = i;

  // adjacency restricted to the component, and lists from colored neighbors
  std::vector<std::vector<int>> nbr(s);
  std::vector<std::uint64_t> mask(s, full);
  for (int i = 0; i < s; ++i) {
    for (int w : g.neighbors(comp[i])) {
      if (colors[w] > 0) {
        if (colors[w] <= 64) mask[i] &= ~(1ull << (colors[w] - 1));
      } else if (local[w] >= 0) {
        nbr[i].push_back(local[w]);
      }
    }
    if (mask[i] == 0) return false;
  }

  // Slack shortcut: if every list is at least the component degree and some
  // list strictly exceeds it, color in reverse BFS order from a slack vertex;
  // each vertex still has an uncolored component neighbor (its BFS parent)
  // when reached, so a free color always remains.
  int root = -1;
  bool all_geq = true;
  for (int i = 0; i < s; ++i) {
    const int pop = std::popcount(mask[i]);
    const int deg = static_cast<int>(nbr[i].size());
    if (pop < deg) {
      all_geq = false;
      break;
    }
    if (pop > deg && root < 0) root = i;
  }
  if (all_geq && root >= 0) {
    std::vector<int> order;
    order.reserve(s);
    std::vector<char> seen(s, 0);
    order.push_back(root);
    seen[root] = 1;
    for (size_t h = 0; h < order.size(); ++h)
      for (int w : nbr[order[h]])
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
    // the component is connected, so the BFS covers it
    for (int h = static_cast<int>(order.size()) - 1; h >= 0; --h) {
      const int i = order[h];
      std::uint64_t avail = mask[i];
      for (int w : nbr[i]) {
        const int c = colors[comp[w]];
        if (c > 0 && c <= 64) avail &= ~(1ull << (c - 1));
      }
      if (avail == 0)
        throw std::logic_error("prext: slack shortcut ran out of colors");
      colors[comp[i]] = std::countr_zero(avail) + 1;
    }
    return true;
  }

  // Backtracking with forward checking; smallest remaining list first, ties
  // by index, colors ascending.
  std::vector<char> done(s, 0);
  int remaining = s;
  std::vector<std::pair<int, std::uint64_t>> trail;  // (vertex, cleared bit)

  auto rec = [&](auto&& self) -> bool {
    if (remaining == 0) return true;
    int v = -1, best = 65;
    for (int i = 0; i < s; ++i)
      if (!done[i]) {
        const int pop = std::popcount(mask[i]);
        if (pop < best) {
          best = pop;
          v = i;
        }
      }
    if (mask[v] == 0) return false;
    done[v] = 1;
    --remaining;
    for (std::uint64_t rest = mask[v]; rest; rest &= rest - 1) {
      charge(budget);
      const int c = std::countr_zero(rest) + 1;
      const std::uint64_t bit = rest & ~(rest - 1);
      const size_t mark = trail.size();
      bool dead = false;
      for (int w : nbr[v]) {
        if (done[w]) continue;
        if (mask[w] & bit) {
          mask[w] &= ~bit;
          trail.emplace_back(w, bit);
          if (mask[w] == 0) dead = true;
        }
      }
      if (!dead) {
        colors[comp[v]] = c;
        if (self(self)) return true;
        colors[comp[v]] = 0;
      }
      while (trail.size() > mark) {
        mask[trail.back().first] |= trail.back().second;
        trail.pop_back();
      }
    }
    done[v] = 0;
    ++remaining;
    return false;
  };
  return rec(rec);
}

// Extends colors (0 = uncolored) to a proper k-coloring, or reports failure
// leaving colors unspecified for the failed component's vertices.
bool extend_lists(const Graph& g, int k, std::vector<int>& colors,
                  Budget* budget) {
  std::vector<int> uncolored;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (colors[v] == 0) uncolored.push_back(v);
  if (uncolored.empty()) return true;
  for (const auto& comp : induced_components(g, uncolored))
    if (!color_component(g, k, colors, comp, budget)) return false;
  return true;
}

}  // namespace

std::optional<std::vector<int>> prext_greedy(const Graph& g, int k,
                                             const Precoloring& p) {
  check_instance(g, k, p);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!p.colored(v) && g.degree(v) > k - 1)
      throw std::invalid_argument(
          "prext_greedy: uncolored vertex of degree > k-1");
  if (!is_proper(g, p)) return std::nullopt;
  return greedy_extend(g, p);
}

std::optional<std::vector<int>> prext_greedy(const PrextInstance& inst) {
  return prext_greedy(inst.graph, inst.k, inst.precoloring);
}

PendantReduction pendant_reduction(const Graph& g, int k,
                                   const Precoloring& p) {
  check_instance(g, k, p);
  PendantReduction out;
  if (!is_proper(g, p)) {
    out.already_infeasible = true;
    out.instance.k = k;
    out.instance.precoloring = Precoloring(k, 0);
    return out;
  }
  const int n = g.vertex_count();
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v)
    if (!p.colored(v)) {
      new_id[v] = static_cast<int>(out.kept.size());
      out.kept.push_back(v);
    }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_id[u] >= 0 && new_id[v] >= 0)
      edges.emplace_back(new_id[u], new_id[v]);

  out.origin = out.kept;
  std::vector<std::pair<int, int>> pendant_colors;  // (vertex, color)
  int next = static_cast<int>(out.kept.size());
  for (int x : p.domain())
    for (int y : g.neighbors(x))
      if (new_id[y] >= 0) {
        edges.emplace_back(next, new_id[y]);
        pendant_colors.emplace_back(next, p.color(x));
        out.origin.push_back(x);
        ++next;
      }

  out.instance.graph = Graph::from_edges(next, edges);
  out.instance.k = k;
  out.instance.precoloring = Precoloring(k, next);
  for (auto [v, c] : pendant_colors) out.instance.precoloring.assign(v, c);
  return out;
}

PendantReduction pendant_reduction(const PrextInstance& inst) {
  return pendant_reduction(inst.graph, inst.k, inst.precoloring);
}

std::optional<std::vector<int>> prext_bounded(const Graph& g, int k,
                                              const Precoloring& p,
                                              Budget* budget) {
  check_instance(g, k, p);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!p.colored(v) && g.degree(v) > k)
      throw std::invalid_argument(
          "prext_bounded: uncolored vertex of degree > k");
  auto red = pendant_reduction(g, k, p);
  if (red.already_infeasible) return std::nullopt;
  std::vector<int> sub = red.instance.precoloring.raw();
  if (!extend_lists(red.instance.graph, k, sub, budget)) return std::nullopt;
  std::vector<int> total = p.raw();
  for (size_t j = 0; j < red.kept.size(); ++j) total[red.kept[j]] = sub[j];
  return total;
}

std::optional<std::vector<int>> prext_bounded(const PrextInstance& inst,
                                              Budget* budget) {
  return prext_bounded(inst.graph, inst.k, inst.precoloring, budget);
}

std::optional<std::vector<int>> prext_exact(const Graph& g, int k,
                                            const Precoloring& p,
                                            Budget* budget) {
  check_instance(g, k, p);
  if (!is_proper(g, p)) return std::nullopt;
  std::vector<int> colors = p.raw();
  if (!extend_lists(g, k, colors, budget)) return std::nullopt;
  return colors;
}

std::optional<std::vector<int>> prext_exact(const PrextInstance& inst,
                                            Budget* budget) {
  return prext_exact(inst.graph, inst.k, inst.precoloring, budget);
}

}  // namespace bcol
