#include "bcol/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace bcol {

namespace mp = boost::multiprecision;

mp::cpp_int beta_bound(int n, int delta, int k) {
  if (k < 1 || n < 1 || delta < 0)
    throw std::invalid_argument("beta_bound: need k >= 1, n >= 1, delta >= 0");
  mp::cpp_int fact = 1;
  for (int i = 2; i <= k - 1; ++i) fact *= i;
  return mp::pow(mp::cpp_int(n), k) *
         mp::pow(mp::cpp_int(delta), k * (k - 1)) * mp::pow(fact, k);
}

namespace {

std::string canonical_key(const Precoloring& p) {
  std::string s;
  for (int v = 0; v < p.size(); ++v) {
    int c = p.color(v);
    if (c == 0) continue;
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>(c & 0xff));
  }
  return s;
}

// Minimality of a b-precoloring under single-vertex restriction, computed on
// the domain alone. b-vertex sets can only shrink under restriction, so it
// suffices to check which of the current b-vertices each removal kills.
bool minimal_on_domain(const Graph& g, const std::vector<int>& color_of,
                       const std::vector<int>& domain, int k) {
  const int d = static_cast<int>(domain.size());
  std::vector<std::vector<int>> cnt(d, std::vector<int>(k + 1, 0));
  for (int a = 0; a < d; ++a)
    for (int u : g.neighbors(domain[a]))
      if (color_of[u] != 0) ++cnt[a][color_of[u]];
  std::vector<std::vector<int>> bvert(k + 1);
  for (int a = 0; a < d; ++a) {
    int cw = color_of[domain[a]];
    bool isb = true;
    for (int c = 1; c <= k && isb; ++c)
      if (c != cw && cnt[a][c] == 0) isb = false;
    if (isb) bvert[cw].push_back(a);
  }
  for (int a = 0; a < d; ++a) {
    int v = domain[a];
    int cv = color_of[v];
    bool breaks_some_color = false;
    for (int c = 1; c <= k && !breaks_some_color; ++c) {
      bool all_killed = true;
      for (int b : bvert[c]) {
        int w = domain[b];
        bool killed = (w == v) || (g.adjacent(w, v) && cnt[b][cv] == 1);
        if (!killed) {
          all_killed = false;
          break;
        }
      }
      if (all_killed) breaks_some_color = true;
    }
    if (!breaks_some_color) return false;
  }
  return true;
}

struct EnumSearch {
  const Graph& g;
  int k;
  Budget* budget;
  std::vector<Precoloring>* sink;
  std::vector<int> color_of;   // 0 = unset
  std::vector<int> assigned;   // assignment trail (b-vertices + Z vertices)
  std::vector<int> xs;
  std::vector<int> zbuf;

  EnumSearch(const Graph& g, int k, Budget* budget, std::vector<Precoloring>* sink)
      : g(g), k(k), budget(budget), sink(sink),
        color_of(g.vertex_count(), 0),
        xs(k, -1) {}

  void run_leading(int x1) {
    if (g.degree(x1) < k - 1) return;
    xs[0] = x1;
    color_of[x1] = 1;
    assigned.push_back(x1);
    tuple_level(1);
    assigned.pop_back();
    color_of[x1] = 0;
  }

  // Ascending b-vertex tuples only: any other assignment of colors to the
  // same vertex set is a relabeling of one found here, and emit_leaf expands
  // every relabeling, so nothing is lost and the tuple space shrinks by k!.
  void tuple_level(int i) {
    if (i == k) {
      charge(budget, 1);
      position_level(0);
      return;
    }
    for (int v = xs[i - 1] + 1; v < g.vertex_count(); ++v) {
      if (g.degree(v) < k - 1) continue;
      xs[i] = v;
      color_of[v] = i + 1;
      assigned.push_back(v);
      tuple_level(i + 1);
      assigned.pop_back();
      color_of[v] = 0;
    }
  }

  void position_level(int i) {
    if (i == k) {
      emit_leaf();
      return;
    }
    std::size_t base = zbuf.size();
    subset_level(i, 0, k - 1, base);
    zbuf.resize(base);
  }

  // Lexicographic (k-1)-subsets of N(x_i); vertices already colored i+1 can
  // never join Z_i, so those branches are pruned.
  void subset_level(int i, std::size_t start, int need, std::size_t base) {
    const auto& nb = g.neighbors(xs[i]);
    if (need == 0) {
      bij_level(i, base, base, 0);
      return;
    }
    for (std::size_t t = start; nb.size() - t >= static_cast<std::size_t>(need); ++t) {
      int v = nb[t];
      if (color_of[v] == i + 1) continue;
      zbuf.push_back(v);
      subset_level(i, t + 1, need - 1, base);
      zbuf.pop_back();
    }
  }

  // Consistent bijections Z_i -> [k] minus {i+1}, color sequences ascending.
  void bij_level(int i, std::size_t base, std::size_t t, std::uint64_t used) {
    if (t == base + static_cast<std::size_t>(k - 1)) {
      position_level(i + 1);
      return;
    }
    int v = zbuf[t];
    int existing = color_of[v];
    if (existing != 0) {
      std::uint64_t bit = std::uint64_t{1} << (existing - 1);
      if (existing != i + 1 && !(used & bit))
        bij_level(i, base, t + 1, used | bit);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      if (c == i + 1) continue;
      std::uint64_t bit = std::uint64_t{1} << (c - 1);
      if (used & bit) continue;
      bool clash = false;
      for (int w : g.neighbors(v))
        if (color_of[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color_of[v] = c;
      assigned.push_back(v);
      bij_level(i, base, t + 1, used | bit);
      assigned.pop_back();
      color_of[v] = 0;
    }
  }

  // Minimality is invariant under color relabeling, so the representative is
  // checked once and its whole orbit emitted.
  void emit_leaf() {
    charge(budget, 1);
    std::vector<int> domain = assigned;
    std::sort(domain.begin(), domain.end());
    if (!minimal_on_domain(g, color_of, domain, k)) return;
    std::vector<int> relabel(k);
    for (int c = 0; c < k; ++c) relabel[c] = c + 1;
    do {
      Precoloring p(k, g.vertex_count());
      for (int v : domain) p.assign(v, relabel[color_of[v] - 1]);
      sink->push_back(std::move(p));
    } while (std::next_permutation(relabel.begin(), relabel.end()));
  }
};

std::vector<Precoloring> enumerate_leading(const Graph& g, int k, int x1,
                                           Budget* budget) {
  std::vector<Precoloring> out;
  EnumSearch search(g, k, budget, &out);
  search.run_leading(x1);
  std::sort(out.begin(), out.end(),
            [](const Precoloring& a, const Precoloring& b) {
              return a.raw() < b.raw();
            });
  return out;
}

}  // namespace

MinimalBPrecoloringStream::MinimalBPrecoloringStream(const Graph& g, int k,
                                                     int jobs, Budget* budget)
    : g_(g), k_(k), jobs_(std::max(1, jobs)), budget_(budget) {
  if (k < 1) throw std::invalid_argument("enumeration: k must be >= 1");
  if (k > 64) throw std::invalid_argument("enumeration: k > 64 unsupported");
}

bool MinimalBPrecoloringStream::next_chunk(std::vector<Precoloring>& out) {
  out.clear();
  const int n = g_.vertex_count();
  while (out.empty() && next_x1_ < n) {
    const int lo = next_x1_;
    const int hi = std::min(n, lo + jobs_);
    std::vector<std::vector<Precoloring>> raw(hi - lo);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs_) if (jobs_ > 1)
    for (int x1 = lo; x1 < hi; ++x1) {
      try {
        raw[x1 - lo] = enumerate_leading(g_, k_, x1, budget_);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (auto& chunk : raw)
      for (auto& p : chunk)
        if (seen_.insert(canonical_key(p)).second) out.push_back(std::move(p));
    next_x1_ = hi;
  }
  return !out.empty();
}

std::optional<Precoloring> MinimalBPrecoloringStream::next() {
  if (buffer_pos_ >= buffer_.size()) {
    buffer_.clear();
    buffer_pos_ = 0;
    if (!next_chunk(buffer_)) return std::nullopt;
  }
  return buffer_[buffer_pos_++];
}

std::vector<Precoloring> enumerate_minimal_b_precolorings(const Graph& g, int k,
                                                          int jobs,
                                                          Budget* budget) {
  MinimalBPrecoloringStream stream(g, k, jobs, budget);
  std::vector<Precoloring> all, chunk;
  while (stream.next_chunk(chunk))
    all.insert(all.end(), chunk.begin(), chunk.end());
  return all;
}

}  // namespace bcol
