#include "bcol/dichotomy.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "bcol/enumerate.hpp"
#include "bcol/prext.hpp"
#include "chunk_scan.hpp"

namespace bcol {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Tries every proper k-coloring of rest[idx..] on top of colors (0 =
// uncolored): vertices in the given order, colors ascending. Stops at the
// first leaf for which leaf() returns true, leaving colors at that
// assignment; otherwise restores colors and returns false.
template <typename Leaf>
bool proper_completions(const Graph& g, int k, std::vector<int>& colors,
                        const std::vector<int>& rest, std::size_t idx,
                        Budget* budget, Leaf&& leaf) {
  if (idx == rest.size()) return leaf();
  const int v = rest[idx];
  for (int c = 1; c <= k; ++c) {
    charge(budget);
    bool clash = false;
    for (int w : g.neighbors(v))
      if (colors[w] == c) {
        clash = true;
        break;
      }
    if (clash) continue;
    colors[v] = c;
    if (proper_completions(g, k, colors, rest, idx + 1, budget, leaf))
      return true;
    colors[v] = 0;
  }
  return false;
}

std::vector<int> minus_domain(const std::vector<int>& vertices,
                              const Precoloring& p) {
  std::vector<int> rest;
  for (int v : vertices)
    if (!p.colored(v)) rest.push_back(v);
  return rest;
}

Precoloring to_precoloring(const std::vector<int>& colors, int k) {
  Precoloring p(k, static_cast<int>(colors.size()));
  for (int v = 0; v < p.size(); ++v)
    if (colors[v] != 0) p.assign(v, colors[v]);
  return p;
}

// Shared driver: walks the minimal b-precoloring stream in chunks and applies
// try_item(item, out_total) to each with deterministic first-success order.
template <typename TryItem>
SolveOutcome drive(const Graph& g, int k, const char* algorithm,
                   const SolveOptions& opts, TryItem&& try_item) {
  const auto t0 = Clock::now();
  SolveOutcome out;
  out.k = k;
  out.algorithm = algorithm;
  Budget counter;
  Budget* budget = opts.budget ? opts.budget : &counter;
  const std::uint64_t used0 = budget->used();
  try {
    MinimalBPrecoloringStream stream(g, k, opts.jobs, budget);
    std::vector<Precoloring> chunk;
    std::vector<std::optional<std::vector<int>>> totals;
    bool yes = false;
    while (!yes && stream.next_chunk(chunk)) {
      out.stats.precolorings_tried += chunk.size();
      totals.assign(chunk.size(), std::nullopt);
      auto res = detail::scan_chunk(
          static_cast<int>(chunk.size()), opts.jobs,
          [&](int i) { return try_item(chunk[i], totals[i], budget); });
      if (res.budget_hit >= 0) throw BudgetExceeded{};
      if (res.success >= 0) {
        out.certificate = certificate_from_total(g, k, *totals[res.success]);
        if (!verify_certificate(g, k, *out.certificate).pass)
          throw std::logic_error(std::string(algorithm) +
                                 ": produced invalid certificate");
        out.answer = Answer::kYes;
        yes = true;
      }
    }
  } catch (const BudgetExceeded&) {
    out.answer = Answer::kBudgetExhausted;
    out.certificate.reset();
  }
  out.stats.nodes = budget->used() - used0;
  out.stats.elapsed_ms = ms_since(t0);
  return out;
}

}  // namespace

SolveOutcome solve_k_eq_m(const Graph& g, const SolveOptions& opts) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("solve_k_eq_m: graph has no vertices");
  const int k = degree_stats(g).m_degree;
  const auto d_set = partition_dtr(g, k).d_set;
  if (static_cast<int>(d_set.size()) > k)
    throw std::logic_error("solve_k_eq_m: |D| > k contradicts m(G)");
  return drive(g, k, "m", opts,
               [&](const Precoloring& item,
                   std::optional<std::vector<int>>& total, Budget* budget) {
                 std::vector<int> colors = item.raw();
                 const auto rest = minus_domain(d_set, item);
                 const bool ok = proper_completions(
                     g, k, colors, rest, 0, budget, [] { return true; });
                 if (!ok) return false;
                 // every vertex of degree >= k is now colored, so the greedy
                 // extension always lands
                 total = greedy_extend(g, to_precoloring(colors, k));
                 return true;
               });
}

SolveOutcome solve_k_eq_delta(const Graph& g, const SolveOptions& opts) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("solve_k_eq_delta: graph has no vertices");
  const int k = degree_stats(g).delta;
  if (k < 1)
    throw std::invalid_argument("solve_k_eq_delta: requires Delta >= 1");
  return drive(g, k, "delta", opts,
               [&](const Precoloring& item,
                   std::optional<std::vector<int>>& total, Budget* budget) {
                 total = prext_bounded(g, k, item, budget);
                 return total.has_value();
               });
}

SolveOutcome solve_k_eq_m_minus_1(const Graph& g, const SolveOptions& opts) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("solve_k_eq_m_minus_1: graph has no vertices");
  const int m = degree_stats(g).m_degree;
  if (m < 2)
    throw std::invalid_argument("solve_k_eq_m_minus_1: requires m(G) >= 2");
  const int k = m - 1;
  std::vector<int> d_set;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= k + 1) d_set.push_back(v);
  if (static_cast<int>(d_set.size()) > k + 1)
    throw std::logic_error("solve_k_eq_m_minus_1: |D| > k+1 contradicts m(G)");
  return drive(g, k, "m-minus-1", opts,
               [&](const Precoloring& item,
                   std::optional<std::vector<int>>& total, Budget* budget) {
                 std::vector<int> colors = item.raw();
                 const auto rest = minus_domain(d_set, item);
                 return proper_completions(
                     g, k, colors, rest, 0, budget, [&] {
                       // degree <= k holds on everything still uncolored
                       auto t = prext_bounded(g, k, to_precoloring(colors, k),
                                              budget);
                       if (!t) return false;
                       total = std::move(t);
                       return true;
                     });
               });
}

}  // namespace bcol
