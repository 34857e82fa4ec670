#include "bcol/coloring.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace bcol {

Precoloring::Precoloring(int k, int n) : k_(k), colors_(n, 0) {
  if (k < 1) throw std::invalid_argument("precoloring: k must be >= 1");
  if (n < 0) throw std::invalid_argument("precoloring: negative vertex count");
}

void Precoloring::assign(int v, int c) {
  if (v < 0 || v >= size())
    throw std::invalid_argument("precoloring: vertex out of range");
  if (c < 1 || c > k_)
    throw std::invalid_argument("precoloring: color out of range");
  colors_[v] = c;
}

std::vector<int> Precoloring::domain() const {
  std::vector<int> d;
  for (int v = 0; v < size(); ++v)
    if (colors_[v] != 0) d.push_back(v);
  return d;
}

int Precoloring::domain_size() const {
  int c = 0;
  for (int x : colors_) c += (x != 0);
  return c;
}

namespace {

void check_sizes(const Graph& g, const Precoloring& p, const char* who) {
  if (p.size() != g.vertex_count())
    throw std::invalid_argument(std::string(who) + ": precoloring size mismatch");
}

}  // namespace

bool is_proper(const Graph& g, const Precoloring& p) {
  check_sizes(g, p, "is_proper");
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!p.colored(u)) continue;
    for (int v : g.neighbors(u)) {
      if (v > u) break;  // sorted; each edge once
      if (p.color(v) == p.color(u)) return false;
    }
  }
  return true;
}

std::optional<int> b_vertex_for(const Graph& g, const Precoloring& p, int color) {
  check_sizes(g, p, "b_vertex_for");
  if (color < 1 || color > p.k())
    throw std::invalid_argument("b_vertex_for: color out of range");
  const int k = p.k();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (p.color(v) != color) continue;
    std::uint64_t seen = 0;
    int distinct = 0;
    for (int w : g.neighbors(v)) {
      int c = p.color(w);
      if (c == 0 || c == color) continue;
      std::uint64_t bit = std::uint64_t{1} << (c & 63);
      if (c <= 63) {
        if (seen & bit) continue;
        seen |= bit;
        ++distinct;
      } else {
        distinct = -1;  // fall back to exact set below
        break;
      }
    }
    if (distinct == -1) {
      std::vector<char> mark(k + 1, 0);
      distinct = 0;
      for (int w : g.neighbors(v)) {
        int c = p.color(w);
        if (c == 0 || c == color || mark[c]) continue;
        mark[c] = 1;
        ++distinct;
      }
    }
    if (distinct == k - 1) return v;
  }
  return std::nullopt;
}

bool is_b_precoloring(const Graph& g, const Precoloring& p) {
  if (!is_proper(g, p)) return false;
  for (int c = 1; c <= p.k(); ++c)
    if (!b_vertex_for(g, p, c)) return false;
  return true;
}

bool is_minimal_b_precoloring(const Graph& g, const Precoloring& p) {
  if (!is_b_precoloring(g, p)) return false;
  Precoloring q = p;
  for (int v : p.domain()) {
    int c = q.color(v);
    q.clear(v);
    bool still = is_b_precoloring(g, q);
    q.assign(v, c);
    if (still) return false;
  }
  return true;
}

Precoloring union_precolorings(const Precoloring& a, const Precoloring& b) {
  if (a.k() != b.k())
    throw std::invalid_argument("union_precolorings: k mismatch");
  if (a.size() != b.size())
    throw std::invalid_argument("union_precolorings: size mismatch");
  Precoloring out = a;
  for (int v = 0; v < b.size(); ++v) {
    if (!b.colored(v)) continue;
    if (out.colored(v))
      throw std::invalid_argument("union_precolorings: overlapping domains");
    out.assign(v, b.color(v));
  }
  return out;
}

Precoloring switch_colors(const Precoloring& p, int i, int j) {
  if (i < 1 || i > p.k() || j < 1 || j > p.k())
    throw std::invalid_argument("switch_colors: color out of range");
  Precoloring out = p;
  for (int v = 0; v < p.size(); ++v) {
    if (p.color(v) == i)
      out.assign(v, j);
    else if (p.color(v) == j)
      out.assign(v, i);
  }
  return out;
}

std::vector<int> greedy_extend(const Graph& g, const Precoloring& p) {
  check_sizes(g, p, "greedy_extend");
  if (!is_proper(g, p))
    throw std::invalid_argument("greedy_extend: precoloring is improper");
  const int k = p.k();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!p.colored(v) && g.degree(v) > k - 1)
      throw std::invalid_argument(
          "greedy_extend: uncolored vertex with degree >= k");
  std::vector<int> colors = p.raw();
  std::vector<char> used(k + 1, 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (colors[v] != 0) continue;
    std::fill(used.begin(), used.end(), 0);
    for (int w : g.neighbors(v))
      if (colors[w] != 0) used[colors[w]] = 1;
    int c = 1;
    while (used[c]) ++c;
    colors[v] = c;
  }
  return colors;
}

BCertificate certificate_from_total(const Graph& g, int k,
                                    const std::vector<int>& colors) {
  BCertificate cert;
  cert.k = k;
  cert.colors = colors;
  const int n = g.vertex_count();
  if (static_cast<int>(colors.size()) != n)
    throw std::logic_error("certificate_from_total: size mismatch");
  Precoloring p(k, n);
  for (int v = 0; v < n; ++v) {
    if (colors[v] < 1 || colors[v] > k)
      throw std::logic_error("certificate_from_total: color out of range");
    p.assign(v, colors[v]);
  }
  if (!is_proper(g, p))
    throw std::logic_error("certificate_from_total: coloring is improper");
  cert.b_vertices.reserve(k);
  for (int c = 1; c <= k; ++c) {
    auto w = b_vertex_for(g, p, c);
    if (!w) throw std::logic_error("certificate_from_total: color " +
                                   std::to_string(c) + " has no b-vertex");
    cert.b_vertices.push_back(*w);
  }
  return cert;
}

VerifyReport verify_certificate(const Graph& g, int k, const BCertificate& cert) {
  VerifyReport rep;
  auto fail = [&](const std::string& s) {
    rep.pass = false;
    rep.violations.push_back(s);
  };
  const int n = g.vertex_count();
  if (cert.k != k) fail("certificate k=" + std::to_string(cert.k) +
                        " does not match requested k=" + std::to_string(k));
  if (static_cast<int>(cert.colors.size()) != n) {
    fail("color vector has " + std::to_string(cert.colors.size()) +
         " entries, graph has " + std::to_string(n) + " vertices");
    return rep;
  }
  for (int v = 0; v < n; ++v)
    if (cert.colors[v] < 1 || cert.colors[v] > cert.k) {
      fail("vertex " + std::to_string(v + 1) + " has color out of range");
      return rep;
    }
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u))
      if (u < v && cert.colors[u] == cert.colors[v])
        fail("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
             " is monochromatic");
  if (static_cast<int>(cert.b_vertices.size()) != cert.k) {
    fail("expected " + std::to_string(cert.k) + " b-vertices, got " +
         std::to_string(cert.b_vertices.size()));
    return rep;
  }
  for (int c = 1; c <= cert.k; ++c) {
    int w = cert.b_vertices[c - 1];
    if (w < 0 || w >= n) {
      fail("b-vertex for color " + std::to_string(c) + " out of range");
      continue;
    }
    if (cert.colors[w] != c) {
      fail("b-vertex " + std::to_string(w + 1) + " is not colored " +
           std::to_string(c));
      continue;
    }
    std::vector<char> seen(cert.k + 1, 0);
    for (int x : g.neighbors(w)) seen[cert.colors[x]] = 1;
    for (int c2 = 1; c2 <= cert.k; ++c2)
      if (c2 != c && !seen[c2])
        fail("color " + std::to_string(c2) + " missing around b-vertex " +
             std::to_string(w + 1) + " of color " + std::to_string(c));
  }
  return rep;
}

std::optional<BCertificate> solve_small_k(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k != 1 && k != 2)
    throw std::invalid_argument("solve_small_k: k must be 1 or 2");
  if (n == 0) return std::nullopt;
  if (k == 1) {
    if (g.edge_count() > 0) return std::nullopt;
    BCertificate cert;
    cert.k = 1;
    cert.colors.assign(n, 1);
    cert.b_vertices = {0};
    return cert;
  }
  if (g.edge_count() == 0) return std::nullopt;
  std::vector<int> colors(n, 0);
  for (int s = 0; s < n; ++s) {
    if (colors[s] != 0) continue;
    colors[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (colors[w] == 0) {
          colors[w] = 3 - colors[u];
          q.push(w);
        } else if (colors[w] == colors[u]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  BCertificate cert;
  cert.k = 2;
  cert.colors = colors;
  auto [u, v] = g.edges().front();
  cert.b_vertices.assign(2, 0);
  cert.b_vertices[colors[u] - 1] = u;
  cert.b_vertices[colors[v] - 1] = v;
  return cert;
}

std::string certificate_to_json(const BCertificate& cert) {
  nlohmann::ordered_json j;
  j["k"] = cert.k;
  j["colors"] = cert.colors;
  std::vector<int> bv;
  bv.reserve(cert.b_vertices.size());
  for (int v : cert.b_vertices) bv.push_back(v + 1);
  j["b_vertices"] = bv;
  return j.dump();
}

BCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
  if (j.contains("certificate")) j = j["certificate"];  // solver envelope
  if (!j.is_object() || !j.contains("k") || !j.contains("colors") ||
      !j.contains("b_vertices"))
    throw std::invalid_argument("certificate JSON: missing k/colors/b_vertices");
  BCertificate cert;
  try {
    cert.k = j["k"].get<int>();
    cert.colors = j["colors"].get<std::vector<int>>();
    cert.b_vertices = j["b_vertices"].get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
  for (int& v : cert.b_vertices) --v;  // wire format is 1-based
  return cert;
}

}  // namespace bcol
