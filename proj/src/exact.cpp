#include "bcol/exact.hpp"

#include <chrono>
#include <stdexcept>

#include "bcol/enumerate.hpp"
#include "bcol/prext.hpp"
#include "chunk_scan.hpp"

namespace bcol {

namespace detail_timing {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace detail_timing

using detail_timing::Clock;
using detail_timing::ms_since;

SolveOutcome solve_exact(const Graph& g, int k, const SolveOptions& opts) {
  if (k < 1) throw std::invalid_argument("solve_exact: k must be >= 1");
  const auto t0 = Clock::now();
  SolveOutcome out;
  out.k = k;
  out.algorithm = "exact-enum";
  Budget counter;  // node accounting when the caller passed no budget
  Budget* budget = opts.budget ? opts.budget : &counter;
  const std::uint64_t used0 = budget->used();
  if (g.vertex_count() == 0) {
    out.stats.elapsed_ms = ms_since(t0);
    return out;
  }
  try {
    MinimalBPrecoloringStream stream(g, k, opts.jobs, budget);
    std::vector<Precoloring> chunk;
    std::vector<std::optional<std::vector<int>>> totals;
    bool yes = false;
    while (!yes && stream.next_chunk(chunk)) {
      out.stats.precolorings_tried += chunk.size();
      totals.assign(chunk.size(), std::nullopt);
      auto res = detail::scan_chunk(static_cast<int>(chunk.size()), opts.jobs,
                                    [&](int i) {
                                      totals[i] = prext_exact(g, k, chunk[i], budget);
                                      return totals[i].has_value();
                                    });
      if (res.budget_hit >= 0) throw BudgetExceeded{};
      if (res.success >= 0) {
        out.certificate = certificate_from_total(g, k, *totals[res.success]);
        if (!verify_certificate(g, k, *out.certificate).pass)
          throw std::logic_error("solve_exact: produced invalid certificate");
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

SolveOutcome solve_exact_direct(const Graph& g, int k,
                                const SolveOptions& opts) {
  if (k < 1) throw std::invalid_argument("solve_exact_direct: k must be >= 1");
  const auto t0 = Clock::now();
  SolveOutcome out;
  out.k = k;
  out.algorithm = "exact-direct";
  Budget counter;
  Budget* budget = opts.budget ? opts.budget : &counter;
  const std::uint64_t used0 = budget->used();
  const int n = g.vertex_count();

  std::vector<int> colors(n, 0);
  // Every color must keep a vertex that can still end up a b-vertex for it:
  // already matching (or unassigned), degree >= k-1, and enough distinct
  // neighbor colors plus unassigned neighbors to reach k-1.
  auto feasible = [&](int depth) {
    for (int c = 1; c <= k; ++c) {
      bool ok = false;
      for (int v = 0; v < n && !ok; ++v) {
        if (g.degree(v) < k - 1) continue;
        if (v < depth && colors[v] != c) continue;
        std::vector<char> seen(k + 1, 0);
        int distinct = 0, open = 0;
        for (int w : g.neighbors(v)) {
          if (w < depth) {
            if (colors[w] != c && !seen[colors[w]]) {
              seen[colors[w]] = 1;
              ++distinct;
            }
          } else {
            ++open;
          }
        }
        ok = distinct + open >= k - 1;
      }
      if (!ok) return false;
    }
    return true;
  };

  bool found = false;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      Precoloring p(k, n);
      for (int u = 0; u < n; ++u) p.assign(u, colors[u]);
      found = is_b_precoloring(g, p);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      charge(budget);
      bool clash = false;
      for (int w : g.neighbors(v)) {
        if (w > v) break;
        if (colors[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors[v] = c;
      if (feasible(v + 1)) self(self, v + 1);
      if (found) return;  // keep colors intact for the certificate
      colors[v] = 0;
    }
  };

  try {
    if (n > 0 && feasible(0)) rec(rec, 0);
    if (found) {
      out.certificate = certificate_from_total(g, k, colors);
      if (!verify_certificate(g, k, *out.certificate).pass)
        throw std::logic_error("solve_exact_direct: invalid certificate");
      out.answer = Answer::kYes;
    }
  } catch (const BudgetExceeded&) {
    out.answer = Answer::kBudgetExhausted;
    out.certificate.reset();
  }
  out.stats.nodes = budget->used() - used0;
  out.stats.elapsed_ms = ms_since(t0);
  return out;
}

BChromaticResult b_chromatic_number(const Graph& g, const SolveOptions& opts) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("b_chromatic_number: graph has no vertices");
  BChromaticResult res;
  const int m = degree_stats(g).m_degree;
  for (int k = m; k >= 1; --k) {
    SolveOutcome out = solve_exact(g, k, opts);
    res.stats.nodes += out.stats.nodes;
    res.stats.precolorings_tried += out.stats.precolorings_tried;
    res.stats.elapsed_ms += out.stats.elapsed_ms;
    if (out.answer == Answer::kBudgetExhausted) throw BudgetExceeded{};
    if (out.answer == Answer::kYes) {
      res.chi_b = k;
      res.certificate = *out.certificate;
      return res;
    }
  }
  // a proper coloring with chi(G) colors can always be rearranged into a
  // b-coloring, so some k in [1, m] must answer yes
  throw std::logic_error("b_chromatic_number: scan found no witness");
}

std::vector<Precoloring> brute_enumerate_minimal_b_precolorings(const Graph& g,
                                                                int k,
                                                                int cap) {
  if (k < 1)
    throw std::invalid_argument("brute enumeration: k must be >= 1");
  const int n = g.vertex_count();
  if (n > cap)
    throw std::invalid_argument("brute enumeration: vertex count exceeds cap");
  std::vector<Precoloring> out;
  std::vector<int> digits(n, 0);  // digit 0 = uncolored
  while (true) {
    int dom = 0;
    for (int d : digits) dom += (d != 0);
    if (dom > 0 && dom <= k * k) {
      Precoloring p(k, n);
      for (int v = 0; v < n; ++v)
        if (digits[v] != 0) p.assign(v, digits[v]);
      if (is_minimal_b_precoloring(g, p)) out.push_back(p);
    }
    int pos = 0;
    while (pos < n && digits[pos] == k) digits[pos++] = 0;
    if (pos == n) break;
    ++digits[pos];
  }
  return out;
}

}  // namespace bcol
