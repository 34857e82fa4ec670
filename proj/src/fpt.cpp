#include "bcol/fpt.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bcol/exact.hpp"
#include "bcol/prext.hpp"

namespace bcol {

namespace {

namespace mp = boost::multiprecision;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ReductionResult identity_reduction(const Graph& g) {
  ReductionResult r;
  r.graph = g;
  r.orig_index.resize(g.vertex_count());
  std::iota(r.orig_index.begin(), r.orig_index.end(), 0);
  return r;
}

Precoloring to_precoloring(const std::vector<int>& colors, int k) {
  Precoloring p(k, static_cast<int>(colors.size()));
  for (int v = 0; v < p.size(); ++v)
    if (colors[v] != 0) p.assign(v, colors[v]);
  return p;
}

// Re-adds removed vertices in reverse removal order; each had degree <= k-2
// among the vertices present at its re-entry, so a free color always exists.
// b-vertices keep their status because neighborhoods only grow.
BCertificate lift_certificate(const Graph& g, int k,
                              const ReductionResult& red,
                              const BCertificate& cert_h) {
  std::vector<int> colors(g.vertex_count(), 0);
  for (std::size_t j = 0; j < red.orig_index.size(); ++j)
    colors[red.orig_index[j]] = cert_h.colors[j];
  for (auto it = red.removed.rbegin(); it != red.removed.rend(); ++it) {
    std::vector<char> used(k + 1, 0);
    for (int w : g.neighbors(*it))
      if (colors[w] != 0) used[colors[w]] = 1;
    int c = 1;
    while (c <= k && used[c]) ++c;
    if (c > k)
      throw std::logic_error("lift_certificate: no free color on re-entry");
    colors[*it] = c;
  }
  return certificate_from_total(g, k, colors);
}

// Explicit Case-1 vertex bounds; dist layers grow by a factor of k-1 because
// everything outside B u D has degree <= k-1.
mp::cpp_int case1_bound_m(int k, int delta_h) {
  mp::cpp_int layers = 0, term = 1;
  for (int i = 1; i <= 4; ++i) {
    layers += term;
    term *= k - 1;
  }
  return 2 * k + 2 * k * mp::cpp_int(delta_h) * layers;
}

mp::cpp_int case1_bound_ell(int k, int ell, int delta_h, int dist) {
  mp::cpp_int layers = 0, term = 1;
  for (int i = 1; i <= dist; ++i) {
    layers += term;
    term *= k - 1;
  }
  const mp::cpp_int first = mp::cpp_int(ell) * delta_h + mp::cpp_int(k) * (k - 1);
  return k + ell + first * layers;
}

std::uint64_t saturate(const mp::cpp_int& x) {
  static const mp::cpp_int top = mp::cpp_int(~std::uint64_t{0});
  return x >= top ? ~std::uint64_t{0} : static_cast<std::uint64_t>(x);
}

struct SplitData {
  ReductionResult red;
  DTRPartition dtr;      // on red.graph
  ScatterSet b;
  std::vector<int> bt;   // scattered members of degree exactly k-1, ascending
  int ell = 0;           // |D| on red.graph
  bool shortcut_no = false;
  mp::cpp_int bound = 0;  // Case-1 vertex bound
};

// Shared front half of both FPT routes and the kernelizers: reduction rule,
// NO shortcut, (D,T,R) partition, scattered set, Case-1 bound.
SplitData case_split(const Graph& g, int k, KernelMode mode) {
  SplitData sd;
  sd.red = k >= 2 ? apply_reduction_rule(g, k) : identity_reduction(g);
  const Graph& h = sd.red.graph;
  // k b-vertices need degree >= k-1 each, and the rule preserves the answer
  if (ell_k(h, k - 1) < k) {
    sd.shortcut_no = true;
    return sd;
  }
  sd.dtr = partition_dtr(h, k);
  sd.ell = static_cast<int>(sd.dtr.d_set.size());
  for (int v : sd.dtr.r_set) {
    bool touches = false;
    for (int w : h.neighbors(v))
      if (h.degree(w) >= k - 1) {
        touches = true;
        break;
      }
    if (!touches)
      throw std::logic_error(
          "case_split: reduced graph has a rest vertex with no neighbor of "
          "degree >= k-1");
  }
  // the conflict-freeness of the Case-2 completion needs distance >= 4
  const int dist = mode == KernelMode::kEll ? std::max(sd.ell + 2, 4) : 4;
  std::vector<int> candidates;
  std::merge(sd.dtr.d_set.begin(), sd.dtr.d_set.end(), sd.dtr.t_set.begin(),
             sd.dtr.t_set.end(), std::back_inserter(candidates));
  sd.b = scattered_set(h, candidates, dist);
  for (int v : sd.b.members)
    if (h.degree(v) == k - 1) sd.bt.push_back(v);
  const int delta_h = degree_stats(h).delta;
  sd.bound = mode == KernelMode::kEll
                 ? case1_bound_ell(k, sd.ell, delta_h, dist)
                 : case1_bound_m(k, delta_h);
  return sd;
}

// Missing colors of x matched to its uncolored neighbors, avoiding for each
// neighbor the colors already fixed around it. naive_clash reports whether
// pairing neighbors and colors in plain ascending order would have collided.
bool complete_neighborhood(const Graph& g, int k, std::vector<int>& colors,
                           int x, int self_color, bool& naive_clash) {
  std::vector<int> u_set;
  std::vector<char> missing(k + 1, 1);
  missing[self_color] = 0;
  for (int w : g.neighbors(x)) {
    if (colors[w] != 0)
      missing[colors[w]] = 0;
    else
      u_set.push_back(w);
  }
  std::vector<int> m_set;
  for (int c = 1; c <= k; ++c)
    if (missing[c]) m_set.push_back(c);
  if (u_set.size() != m_set.size())
    throw std::logic_error(
        "complete_neighborhood: colored neighborhood is not injective");
  const int s = static_cast<int>(u_set.size());
  if (s == 0) return true;

  std::vector<std::vector<char>> allowed(s, std::vector<char>(s, 1));
  for (int a = 0; a < s; ++a) {
    std::vector<char> near(k + 1, 0);
    for (int w : g.neighbors(u_set[a]))
      if (colors[w] != 0) near[colors[w]] = 1;
    for (int b = 0; b < s; ++b) allowed[a][b] = !near[m_set[b]];
    if (!allowed[a][a]) naive_clash = true;
  }

  std::vector<int> match(s, -1);  // color slot -> neighbor slot
  auto augment = [&](auto&& self, int a, std::vector<char>& vis) -> bool {
    for (int b = 0; b < s; ++b) {
      if (!allowed[a][b] || vis[b]) continue;
      vis[b] = 1;
      if (match[b] < 0 || self(self, match[b], vis)) {
        match[b] = a;
        return true;
      }
    }
    return false;
  };
  for (int a = 0; a < s; ++a) {
    std::vector<char> vis(s, 0);
    if (!augment(augment, a, vis)) return false;
  }
  for (int b = 0; b < s; ++b) colors[u_set[match[b]]] = m_set[b];
  return true;
}

// Case 2 of the ell_k <= k route: scattered b-vertices get their own colors,
// D is colored injectively, neighborhoods are completed by matching, the rest
// is greedy. Absent only if every injective D-coloring defeats the matching.
std::optional<std::vector<int>> construct_case2_m(const Graph& h, int k,
                                                  const std::vector<int>& bprime,
                                                  const std::vector<int>& d_set,
                                                  SolveStats& stats,
                                                  Budget* budget) {
  auto attempt = [&](const Precoloring& d_colors)
      -> std::optional<std::vector<int>> {
    charge(budget);
    std::vector<int> colors(h.vertex_count(), 0);
    for (int i = 0; i < k; ++i) colors[bprime[i]] = i + 1;
    for (int v : d_colors.domain()) colors[v] = d_colors.color(v);
    for (int i = 0; i < k; ++i)
      if (!complete_neighborhood(h, k, colors, bprime[i], i + 1,
                                 stats.bijection_gap_witness))
        return std::nullopt;
    return greedy_extend(h, to_precoloring(colors, k));
  };

  if (auto d_colors = color_d_injective(h, d_set, bprime, k)) {
    if (auto total = attempt(*d_colors)) return total;
  }

  // ladder step: retry every injective D-coloring that avoids each member's
  // scattered-neighbor color
  stats.used_fallback = true;
  const int dn = static_cast<int>(d_set.size());
  std::vector<int> forbid(dn, 0);
  for (int di = 0; di < dn; ++di)
    for (int bi = 0; bi < k; ++bi)
      if (h.adjacent(d_set[di], bprime[bi])) forbid[di] = bi + 1;
  std::vector<int> pick(dn, 0);
  std::vector<char> used(k + 1, 0);
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int di) -> bool {
    if (di == dn) {
      Precoloring p(k, h.vertex_count());
      for (int t = 0; t < dn; ++t) p.assign(d_set[t], pick[t]);
      found = attempt(p);
      return found.has_value();
    }
    for (int c = 1; c <= k; ++c) {
      if (used[c] || c == forbid[di]) continue;
      used[c] = 1;
      pick[di] = c;
      if (self(self, di + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

struct Case2Ell {
  enum class Status { kTotal, kNo, kFallback };
  Status status = Status::kFallback;
  std::vector<int> total;
};

// Case 2 of the general route: proper k-coloring of H[D u B'] (none means H
// itself is not k-colorable, a definitive NO), per-component recoloring, then
// neighborhood completion and greedy extension.
Case2Ell construct_case2_ell(const Graph& h, int k,
                             const std::vector<int>& bprime,
                             const std::vector<int>& d_set, SolveStats& stats,
                             Budget* budget) {
  Case2Ell res;
  std::vector<int> bsorted = bprime;
  std::sort(bsorted.begin(), bsorted.end());
  std::vector<int> s_set;
  std::merge(d_set.begin(), d_set.end(), bsorted.begin(), bsorted.end(),
             std::back_inserter(s_set));
  const auto comps = induced_components(h, s_set);

  std::vector<int> comp_of(h.vertex_count(), -1);
  for (std::size_t ci = 0; ci < comps.size(); ++ci)
    for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);
  std::vector<int> b_count(comps.size(), 0);
  for (int x : bprime) ++b_count[comp_of[x]];
  for (int c : b_count)
    if (c > 1)
      throw std::logic_error(
          "case 2: component carries two scattered b-vertices");

  // proper k-coloring of H[S]
  std::vector<int> loc(h.vertex_count(), -1);
  for (std::size_t i = 0; i < s_set.size(); ++i)
    loc[s_set[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> sub_edges;
  for (auto [u, v] : h.edges())
    if (loc[u] >= 0 && loc[v] >= 0) sub_edges.emplace_back(loc[u], loc[v]);
  Graph sub = Graph::from_edges(static_cast<int>(s_set.size()), sub_edges);
  charge(budget);
  auto subcol =
      prext_exact(sub, k, Precoloring(k, sub.vertex_count()), budget);
  if (!subcol) {
    res.status = Case2Ell::Status::kNo;
    return res;
  }

  std::vector<int> colors(h.vertex_count(), 0);
  for (std::size_t i = 0; i < s_set.size(); ++i) colors[s_set[i]] = (*subcol)[i];

  std::vector<int> internal_b(k, -1);
  for (int i = 0; i < k; ++i) {
    const int x = bprime[i];
    const auto& comp = comps[comp_of[x]];
    if (comp.size() == 1) {
      colors[x] = i + 1;  // trivial component: any color works
      continue;
    }
    std::vector<std::pair<int, int>> start;
    start.reserve(comp.size());
    for (int v : comp) start.emplace_back(v, colors[v]);
    const RecolorOutcome rc = recolor_component(h, comp, x, i + 1, start, k);
    for (auto [v, c] : rc.coloring) colors[v] = c;
    if (rc.kind == RecolorOutcome::Kind::kInternalBVertex)
      internal_b[i] = rc.b_vertex;
  }

  for (int i = 0; i < k; ++i) {
    if (internal_b[i] >= 0) continue;
    if (!complete_neighborhood(h, k, colors, bprime[i], i + 1,
                               stats.bijection_gap_witness)) {
      res.status = Case2Ell::Status::kFallback;
      return res;
    }
  }
  res.total = greedy_extend(h, to_precoloring(colors, k));
  res.status = Case2Ell::Status::kTotal;
  return res;
}

}  // namespace

ReductionResult apply_reduction_rule(const Graph& g, int k) {
  if (k < 2)
    throw std::invalid_argument("apply_reduction_rule: k must be >= 2");
  const int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  ReductionResult out;
  bool removed_one = true;
  while (removed_one) {
    removed_one = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || deg[v] > k - 2) continue;
      bool all_low = true;
      for (int w : g.neighbors(v))
        if (alive[w] && deg[w] > k - 2) {
          all_low = false;
          break;
        }
      if (!all_low) continue;
      alive[v] = 0;
      for (int w : g.neighbors(v))
        if (alive[w]) --deg[w];
      out.removed.push_back(v);
      removed_one = true;
      break;  // restart the ascending scan
    }
  }
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      new_id[v] = static_cast<int>(out.orig_index.size());
      out.orig_index.push_back(v);
    }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (alive[u] && alive[v]) edges.emplace_back(new_id[u], new_id[v]);
  out.graph =
      Graph::from_edges(static_cast<int>(out.orig_index.size()), edges);
  return out;
}

ScatterSet scattered_set(const Graph& g, const std::vector<int>& candidates,
                         int min_dist) {
  if (min_dist < 1)
    throw std::invalid_argument("scattered_set: min_dist must be >= 1");
  ScatterSet out;
  out.min_pairwise_distance = min_dist;
  const int n = g.vertex_count();
  std::vector<int> cands = candidates;
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<char> blocked(n, 0);  // within distance < min_dist of a member
  std::vector<int> dist(n);
  for (int c : cands) {
    if (c < 0 || c >= n)
      throw std::invalid_argument("scattered_set: candidate out of range");
    if (blocked[c]) continue;
    out.members.push_back(c);
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[c] = 0;
    blocked[c] = 1;
    q.push(c);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (dist[u] == min_dist - 1) continue;
      for (int w : g.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          blocked[w] = 1;
          q.push(w);
        }
    }
  }
  return out;
}

std::optional<Precoloring> color_d_injective(const Graph& g,
                                             const std::vector<int>& d_set,
                                             const std::vector<int>& bprime,
                                             int k) {
  if (k < 1) throw std::invalid_argument("color_d_injective: k must be >= 1");
  const int dn = static_cast<int>(d_set.size());
  if (dn > k) return std::nullopt;  // injectivity impossible
  std::vector<int> forbid(dn, 0);
  for (int di = 0; di < dn; ++di) {
    int hits = 0;
    for (std::size_t bi = 0; bi < bprime.size(); ++bi)
      if (g.adjacent(d_set[di], bprime[bi])) {
        ++hits;
        forbid[di] = static_cast<int>(bi) + 1;
      }
    if (hits > 1)
      throw std::logic_error(
          "color_d_injective: member adjacent to two scattered b-vertices");
  }
  std::vector<int> match(k + 1, -1);  // color -> d index
  auto augment = [&](auto&& self, int di, std::vector<char>& vis) -> bool {
    for (int c = 1; c <= k; ++c) {
      if (c == forbid[di] || vis[c]) continue;
      vis[c] = 1;
      if (match[c] < 0 || self(self, match[c], vis)) {
        match[c] = di;
        return true;
      }
    }
    return false;
  };
  for (int di = 0; di < dn; ++di) {
    std::vector<char> vis(k + 1, 0);
    if (!augment(augment, di, vis)) return std::nullopt;
  }
  Precoloring p(k, g.vertex_count());
  for (int c = 1; c <= k; ++c)
    if (match[c] >= 0) p.assign(d_set[match[c]], c);
  return p;
}

RecolorOutcome recolor_component(const Graph& g,
                                 const std::vector<int>& component, int x_i,
                                 int color_i,
                                 const std::vector<std::pair<int, int>>& start,
                                 int k) {
  if (k < 1 || color_i < 1 || color_i > k)
    throw std::invalid_argument("recolor_component: color out of range");
  std::vector<int> comp = component;
  std::sort(comp.begin(), comp.end());
  comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
  const int s = static_cast<int>(comp.size());
  std::vector<int> loc(g.vertex_count(), -1);
  for (int i = 0; i < s; ++i) {
    if (comp[i] < 0 || comp[i] >= g.vertex_count())
      throw std::invalid_argument("recolor_component: vertex out of range");
    loc[comp[i]] = i;
  }
  if (loc[x_i] < 0)
    throw std::invalid_argument("recolor_component: x_i not in component");
  if (g.degree(x_i) != k - 1)
    throw std::invalid_argument("recolor_component: deg(x_i) must be k-1");

  std::vector<int> col(s, 0);
  for (auto [v, c] : start) {
    if (v < 0 || v >= g.vertex_count() || loc[v] < 0)
      throw std::invalid_argument("recolor_component: start vertex not in component");
    if (c < 1 || c > k || col[loc[v]] != 0)
      throw std::invalid_argument("recolor_component: bad start coloring");
    col[loc[v]] = c;
  }
  for (int i = 0; i < s; ++i)
    if (col[i] == 0)
      throw std::invalid_argument("recolor_component: start misses a vertex");

  std::vector<std::vector<char>> real(s, std::vector<char>(s, 0));
  for (int i = 0; i < s; ++i)
    for (int w : g.neighbors(comp[i]))
      if (loc[w] >= 0) real[i][loc[w]] = 1;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (real[i][j] && col[i] == col[j])
        throw std::invalid_argument("recolor_component: start is improper");

  const int x = loc[x_i];
  if (col[x] != color_i) {
    const int old = col[x];
    for (int i = 0; i < s; ++i) {
      if (col[i] == old)
        col[i] = color_i;
      else if (col[i] == color_i)
        col[i] = old;
    }
  }
  auto virt = real;  // virtual edges accumulate between x's neighbors
  std::vector<int> nbx;
  for (int i = 0; i < s; ++i)
    if (real[x][i]) nbx.push_back(i);

  auto injective = [&]() {
    std::vector<char> seen(k + 1, 0);
    seen[col[x]] = 1;
    for (int y : nbx) {
      if (seen[col[y]]) return false;
      seen[col[y]] = 1;
    }
    return true;
  };
  auto finish = [&](RecolorOutcome::Kind kind, int bv) {
    // postconditions are machine-checked on every exit
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        if (real[i][j] && col[i] == col[j])
          throw std::logic_error("recolor_component: produced improper coloring");
    if (kind == RecolorOutcome::Kind::kInjectiveNeighborhood) {
      if (col[x] != color_i || !injective())
        throw std::logic_error("recolor_component: neighborhood not injective");
    } else {
      const int z = loc[bv];
      if (col[z] != color_i)
        throw std::logic_error("recolor_component: b-vertex lost its color");
      std::vector<char> seen(k + 1, 0);
      seen[col[z]] = 1;
      int cnt = 1;
      for (int w = 0; w < s; ++w)
        if (real[z][w] && !seen[col[w]]) {
          seen[col[w]] = 1;
          ++cnt;
        }
      if (cnt != k)
        throw std::logic_error("recolor_component: b-vertex check failed");
    }
    RecolorOutcome out;
    out.kind = kind;
    out.b_vertex = bv;
    out.coloring.reserve(s);
    for (int i = 0; i < s; ++i) out.coloring.emplace_back(comp[i], col[i]);
    return out;
  };

  const int max_rounds = k * k + 2;
  for (int round = 0; round < max_rounds; ++round) {
    if (injective())
      return finish(RecolorOutcome::Kind::kInjectiveNeighborhood, -1);
    // smallest color != color_i absent around x; one exists because the
    // neighborhood has <= k-2 distinct colors when not injective
    std::vector<char> present(k + 1, 0);
    for (int y : nbx) present[col[y]] = 1;
    int j = 0;
    for (int c = 1; c <= k && j == 0; ++c)
      if (c != color_i && !present[c]) j = c;
    if (j == 0)
      throw std::logic_error("recolor_component: no absent color found");
    // clear color j from the component, or find an internal b-vertex; a
    // j-colored vertex is never adjacent to x and never carries virtual edges
    for (int z = 0; z < s; ++z) {
      if (col[z] != j) continue;
      std::vector<char> seen(k + 1, 0);
      seen[j] = 1;
      int cnt = 1;
      for (int w = 0; w < s; ++w)
        if (real[z][w] && !seen[col[w]]) {
          seen[col[w]] = 1;
          ++cnt;
        }
      if (cnt == k) {
        for (int w = 0; w < s; ++w) {
          if (col[w] == color_i)
            col[w] = j;
          else if (col[w] == j)
            col[w] = color_i;
        }
        return finish(RecolorOutcome::Kind::kInternalBVertex, comp[z]);
      }
      std::vector<char> pres(k + 1, 0);
      for (int w = 0; w < s; ++w)
        if (virt[z][w]) pres[col[w]] = 1;
      int j2 = 0;
      for (int c = 1; c <= k && j2 == 0; ++c)
        if (c != j && !pres[c]) j2 = c;
      if (j2 == 0)
        throw std::logic_error("recolor_component: no recoloring color");
      col[z] = j2;
    }
    // color j is now unused; merge the first non-adjacent neighbor pair
    int y1 = -1, y2 = -1;
    for (std::size_t a = 0; a < nbx.size() && y1 < 0; ++a)
      for (std::size_t b = a + 1; b < nbx.size(); ++b)
        if (!virt[nbx[a]][nbx[b]]) {
          y1 = nbx[a];
          y2 = nbx[b];
          break;
        }
    if (y1 < 0)
      throw std::logic_error(
          "recolor_component: neighborhood clique but not injective");
    virt[y1][y2] = virt[y2][y1] = 1;
    col[y1] = j;
  }
  throw std::logic_error("recolor_component: did not converge");
}

SolveOutcome solve_m_param_delta(const Graph& g, int k,
                                 const SolveOptions& opts) {
  if (k < 1)
    throw std::invalid_argument("solve_m_param_delta: k must be >= 1");
  const auto t0 = Clock::now();
  SolveOutcome out;
  out.k = k;
  out.algorithm = "fpt-delta";
  if (g.vertex_count() > 0 && ell_k(g, k) > k)
    throw std::invalid_argument("solve_m_param_delta: requires ell_k(G) <= k");
  Budget counter;
  Budget* budget = opts.budget ? opts.budget : &counter;
  const std::uint64_t used0 = budget->used();
  if (g.vertex_count() == 0) {
    out.case_taken = "empty-graph";
    out.stats.elapsed_ms = ms_since(t0);
    return out;
  }
  try {
    SplitData sd = case_split(g, k, KernelMode::kM);
    const Graph& h = sd.red.graph;
    if (sd.shortcut_no) {
      out.case_taken = "no-too-few-b-candidates";
    } else if (static_cast<int>(sd.bt.size()) < k) {
      out.case_taken = "case1-kernel";
      if (h.vertex_count() > sd.bound)
        throw std::logic_error("solve_m_param_delta: Case-1 bound violated");
      SolveOutcome inner = solve_exact(h, k, SolveOptions{opts.jobs, budget});
      out.stats.precolorings_tried += inner.stats.precolorings_tried;
      if (inner.answer == Answer::kBudgetExhausted) throw BudgetExceeded{};
      if (inner.answer == Answer::kYes) {
        out.certificate = lift_certificate(g, k, sd.red, *inner.certificate);
        out.answer = Answer::kYes;
      }
    } else {
      if (sd.ell > k)
        throw std::logic_error("solve_m_param_delta: |D| > k after reduction");
      out.case_taken = "case2-construct";
      std::vector<int> bprime(sd.bt.begin(), sd.bt.begin() + k);
      auto total = construct_case2_m(h, k, bprime, sd.dtr.d_set, out.stats,
                                     budget);
      if (total) {
        out.certificate =
            lift_certificate(g, k, sd.red, certificate_from_total(h, k, *total));
        out.answer = Answer::kYes;
      } else {
        // matching defeated on every injective D-coloring: decide exactly
        out.case_taken = "construction-fallback";
        out.stats.used_fallback = true;
        SolveOutcome inner = solve_exact(h, k, SolveOptions{opts.jobs, budget});
        out.stats.precolorings_tried += inner.stats.precolorings_tried;
        if (inner.answer == Answer::kBudgetExhausted) throw BudgetExceeded{};
        if (inner.answer == Answer::kYes) {
          out.certificate = lift_certificate(g, k, sd.red, *inner.certificate);
          out.answer = Answer::kYes;
        }
      }
    }
    if (out.certificate &&
        !verify_certificate(g, k, *out.certificate).pass)
      throw std::logic_error("solve_m_param_delta: invalid certificate");
  } catch (const BudgetExceeded&) {
    out.answer = Answer::kBudgetExhausted;
    out.certificate.reset();
  }
  out.stats.nodes = budget->used() - used0;
  out.stats.elapsed_ms = ms_since(t0);
  return out;
}

SolveOutcome solve_delta_ell(const Graph& g, int k, const SolveOptions& opts) {
  if (k < 1) throw std::invalid_argument("solve_delta_ell: k must be >= 1");
  const auto t0 = Clock::now();
  SolveOutcome out;
  out.k = k;
  out.algorithm = "fpt-ell";
  Budget counter;
  Budget* budget = opts.budget ? opts.budget : &counter;
  const std::uint64_t used0 = budget->used();
  if (g.vertex_count() == 0) {
    out.case_taken = "empty-graph";
    out.stats.elapsed_ms = ms_since(t0);
    return out;
  }
  if (ell_k(g, k) <= k) {
    SolveOutcome inner = solve_m_param_delta(g, k, opts);
    inner.algorithm = "fpt-ell";
    inner.case_taken = "dispatch-ell-le-k/" + inner.case_taken;
    return inner;
  }
  const DegreeStats ds = degree_stats(g);
  if (k > ds.delta + 1) {
    out.case_taken = "dispatch-k-gt-delta-plus-1";
    out.stats.elapsed_ms = ms_since(t0);
    return out;
  }
  if (k <= 2) {
    out.case_taken = "dispatch-small-k";
    if (auto cert = solve_small_k(g, k)) {
      if (!verify_certificate(g, k, *cert).pass)
        throw std::logic_error("solve_delta_ell: invalid small-k certificate");
      out.certificate = std::move(cert);
      out.answer = Answer::kYes;
    }
    out.stats.elapsed_ms = ms_since(t0);
    return out;
  }
  try {
    SplitData sd = case_split(g, k, KernelMode::kEll);
    const Graph& h = sd.red.graph;
    if (sd.shortcut_no) {
      out.case_taken = "no-too-few-b-candidates";
    } else if (static_cast<int>(sd.bt.size()) < k) {
      out.case_taken = "case1-kernel";
      if (h.vertex_count() > sd.bound)
        throw std::logic_error("solve_delta_ell: Case-1 bound violated");
      SolveOutcome inner = solve_exact(h, k, SolveOptions{opts.jobs, budget});
      out.stats.precolorings_tried += inner.stats.precolorings_tried;
      if (inner.answer == Answer::kBudgetExhausted) throw BudgetExceeded{};
      if (inner.answer == Answer::kYes) {
        out.certificate = lift_certificate(g, k, sd.red, *inner.certificate);
        out.answer = Answer::kYes;
      }
    } else {
      out.case_taken = "case2-construct";
      std::vector<int> bprime(sd.bt.begin(), sd.bt.begin() + k);
      Case2Ell c2 = construct_case2_ell(h, k, bprime, sd.dtr.d_set, out.stats,
                                        budget);
      if (c2.status == Case2Ell::Status::kTotal) {
        out.certificate = lift_certificate(
            g, k, sd.red, certificate_from_total(h, k, c2.total));
        out.answer = Answer::kYes;
      } else if (c2.status == Case2Ell::Status::kNo) {
        // H[D u B'] admits no proper k-coloring, so neither does H
        out.case_taken = "case2-subgraph-uncolorable";
      } else {
        out.case_taken = "construction-fallback";
        out.stats.used_fallback = true;
        SolveOutcome inner = solve_exact(h, k, SolveOptions{opts.jobs, budget});
        out.stats.precolorings_tried += inner.stats.precolorings_tried;
        if (inner.answer == Answer::kBudgetExhausted) throw BudgetExceeded{};
        if (inner.answer == Answer::kYes) {
          out.certificate = lift_certificate(g, k, sd.red, *inner.certificate);
          out.answer = Answer::kYes;
        }
      }
    }
    if (out.certificate &&
        !verify_certificate(g, k, *out.certificate).pass)
      throw std::logic_error("solve_delta_ell: invalid certificate");
  } catch (const BudgetExceeded&) {
    out.answer = Answer::kBudgetExhausted;
    out.certificate.reset();
  }
  out.stats.nodes = budget->used() - used0;
  out.stats.elapsed_ms = ms_since(t0);
  return out;
}

KernelResult kernelize(const Graph& g, int k, KernelMode mode,
                       const SolveOptions& opts) {
  if (k < 1) throw std::invalid_argument("kernelize: k must be >= 1");
  KernelResult res;
  res.k = k;
  const char* algo = mode == KernelMode::kM ? "kernel-m" : "kernel-ell";
  if (mode == KernelMode::kM && g.vertex_count() > 0 && ell_k(g, k) > k)
    throw std::invalid_argument("kernelize: mode m requires ell_k(G) <= k");
  auto solved = [&](SolveOutcome o) {
    o.algorithm = algo;
    res.solved = true;
    res.outcome = std::move(o);
    return res;
  };
  if (g.vertex_count() == 0) {
    SolveOutcome o;
    o.k = k;
    o.case_taken = "empty-graph";
    return solved(std::move(o));
  }
  if (mode == KernelMode::kEll) {
    if (ell_k(g, k) <= k) {
      mode = KernelMode::kM;  // the ell_k <= k machinery covers this regime
    } else if (k > degree_stats(g).delta + 1) {
      SolveOutcome o;
      o.k = k;
      o.case_taken = "dispatch-k-gt-delta-plus-1";
      return solved(std::move(o));
    } else if (k <= 2) {
      SolveOutcome o;
      o.k = k;
      o.case_taken = "dispatch-small-k";
      if (auto cert = solve_small_k(g, k)) {
        o.answer = Answer::kYes;
        o.certificate = std::move(cert);
      }
      return solved(std::move(o));
    }
  }
  SolveOutcome o;
  o.k = k;
  Budget counter;
  Budget* budget = opts.budget ? opts.budget : &counter;
  try {
    SplitData sd = case_split(g, k, mode);
    const Graph& h = sd.red.graph;
    if (sd.shortcut_no) {
      o.case_taken = "no-too-few-b-candidates";
      return solved(std::move(o));
    }
    res.size_bound = saturate(sd.bound);
    if (static_cast<int>(sd.bt.size()) < k) {
      if (h.vertex_count() > sd.bound)
        throw std::logic_error("kernelize: Case-1 bound violated");
      res.reduced = h;
      return res;
    }
    o.case_taken = "case2-construct";
    std::vector<int> bprime(sd.bt.begin(), sd.bt.begin() + k);
    if (mode == KernelMode::kM) {
      if (auto total = construct_case2_m(h, k, bprime, sd.dtr.d_set, o.stats,
                                         budget)) {
        o.certificate =
            lift_certificate(g, k, sd.red, certificate_from_total(h, k, *total));
        o.answer = Answer::kYes;
      } else {
        o.case_taken = "construction-fallback";
        o.stats.used_fallback = true;
        SolveOutcome inner = solve_exact(h, k, SolveOptions{opts.jobs, budget});
        if (inner.answer == Answer::kBudgetExhausted) throw BudgetExceeded{};
        if (inner.answer == Answer::kYes) {
          o.certificate = lift_certificate(g, k, sd.red, *inner.certificate);
          o.answer = Answer::kYes;
        }
      }
    } else {
      Case2Ell c2 =
          construct_case2_ell(h, k, bprime, sd.dtr.d_set, o.stats, budget);
      if (c2.status == Case2Ell::Status::kTotal) {
        o.certificate = lift_certificate(g, k, sd.red,
                                         certificate_from_total(h, k, c2.total));
        o.answer = Answer::kYes;
      } else if (c2.status == Case2Ell::Status::kNo) {
        o.case_taken = "case2-subgraph-uncolorable";
      } else {
        o.case_taken = "construction-fallback";
        o.stats.used_fallback = true;
        SolveOutcome inner = solve_exact(h, k, SolveOptions{opts.jobs, budget});
        if (inner.answer == Answer::kBudgetExhausted) throw BudgetExceeded{};
        if (inner.answer == Answer::kYes) {
          o.certificate = lift_certificate(g, k, sd.red, *inner.certificate);
          o.answer = Answer::kYes;
        }
      }
    }
    if (o.certificate && !verify_certificate(g, k, *o.certificate).pass)
      throw std::logic_error("kernelize: invalid certificate");
  } catch (const BudgetExceeded&) {
    o.answer = Answer::kBudgetExhausted;
    o.certificate.reset();
  }
  return solved(std::move(o));
}

}  // namespace bcol
