#include "bcol/gadgets.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace bcol {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool is_regular(const Graph& g, int r) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != r) return false;
  return true;
}

void confirm(GadgetInstance& inst, const std::string& name, long long expect,
             long long actual) {
  if (expect != actual)
    throw std::logic_error("gadget " + inst.provenance + ": " + name +
                           " expected " + std::to_string(expect) + ", got " +
                           std::to_string(actual));
  inst.expected_invariants.emplace_back(name, expect);
}

// Vertex layout shared by gen_havet and its forward certificate.
struct HavetLayout {
  int n = 0;        // base vertices, ids 0..n-1 (clique)
  int m = 0;        // base edges; subdivision vertex for edge j has id n+j
  int a1 = 0;       // K_{n,n+3}: high side a1..a1+n-1, then low side b1
  int b1 = 0;
  int a2 = 0;       // first K_{2,n+3}
  int b2 = 0;
  int a3 = 0;       // second K_{2,n+3}
  int b3 = 0;
  int total = 0;

  explicit HavetLayout(const Graph& base) {
    require(base.vertex_count() >= 4, "havet: base needs >= 4 vertices");
    require(is_regular(base, 3), "havet: base must be 3-regular");
    n = base.vertex_count();
    m = base.edge_count();
    a1 = n + m;
    b1 = a1 + n;
    a2 = b1 + (n + 3);
    b2 = a2 + 2;
    a3 = b2 + (n + 3);
    b3 = a3 + 2;
    total = b3 + (n + 3);
  }
};

std::vector<std::pair<int, int>> havet_edges(const Graph& base,
                                             const HavetLayout& L) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < L.n; ++u)
    for (int v = u + 1; v < L.n; ++v) edges.emplace_back(u, v);
  const auto base_edges = base.edges();
  for (int j = 0; j < L.m; ++j) {
    edges.emplace_back(L.n + j, base_edges[j].first);
    edges.emplace_back(L.n + j, base_edges[j].second);
  }
  for (int a = 0; a < L.n; ++a)
    for (int b = 0; b < L.n + 3; ++b) edges.emplace_back(L.a1 + a, L.b1 + b);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < L.n + 3; ++b) edges.emplace_back(L.a2 + a, L.b2 + b);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < L.n + 3; ++b) edges.emplace_back(L.a3 + a, L.b3 + b);
  return edges;
}

}  // namespace

GadgetInstance gen_havet(const Graph& base) {
  const HavetLayout L(base);
  GadgetInstance inst;
  inst.provenance =
      "havet(base: n=" + std::to_string(L.n) + ", m=" + std::to_string(L.m) + ")";
  inst.graph = Graph::from_edges(L.total, havet_edges(base, L));
  inst.k = L.n + 3;
  const DegreeStats ds = degree_stats(inst.graph);
  confirm(inst, "vertex_count", L.total, inst.graph.vertex_count());
  confirm(inst, "delta", L.n + 3, ds.delta);
  confirm(inst, "m_degree", L.n + 4, ds.m_degree);
  long long high = 0;
  for (int v = 0; v < inst.graph.vertex_count(); ++v)
    high += inst.graph.degree(v) == L.n + 3;
  confirm(inst, "vertices_of_degree_n_plus_3", L.n + 4, high);
  return inst;
}

BCertificate havet_forward_certificate(const Graph& base,
                                       const std::vector<int>& edge_colors) {
  const HavetLayout L(base);
  const auto base_edges = base.edges();
  require(static_cast<int>(edge_colors.size()) == L.m,
          "havet certificate: one color per base edge required");
  for (int c : edge_colors)
    require(c >= 1 && c <= 3, "havet certificate: edge colors must be 1..3");
  for (int j = 0; j < L.m; ++j)
    for (int j2 = j + 1; j2 < L.m; ++j2) {
      auto [a, b] = base_edges[j];
      auto [c, d] = base_edges[j2];
      const bool incident = a == c || a == d || b == c || b == d;
      require(!incident || edge_colors[j] != edge_colors[j2],
              "havet certificate: edge coloring is not proper");
    }

  const int k = L.n + 3;
  BCertificate cert;
  cert.k = k;
  cert.colors.assign(L.total, 0);
  for (int i = 0; i < L.n; ++i) cert.colors[i] = i + 4;  // clique: 4..n+3
  for (int j = 0; j < L.m; ++j) cert.colors[L.n + j] = edge_colors[j];
  // block 1: high side all color 1, low side cycles through 2..n+3
  for (int a = 0; a < L.n; ++a) cert.colors[L.a1 + a] = 1;
  for (int b = 0; b < L.n + 3; ++b)
    cert.colors[L.b1 + b] = 2 + b % (L.n + 2);
  // block 2: color 2 against everything except 2
  std::vector<int> rest2;
  for (int c = 1; c <= k; ++c)
    if (c != 2) rest2.push_back(c);
  for (int a = 0; a < 2; ++a) cert.colors[L.a2 + a] = 2;
  for (int b = 0; b < L.n + 3; ++b)
    cert.colors[L.b2 + b] = rest2[b % rest2.size()];
  // block 3: color 3 against everything except 3
  std::vector<int> rest3;
  for (int c = 1; c <= k; ++c)
    if (c != 3) rest3.push_back(c);
  for (int a = 0; a < 2; ++a) cert.colors[L.a3 + a] = 3;
  for (int b = 0; b < L.n + 3; ++b)
    cert.colors[L.b3 + b] = rest3[b % rest3.size()];

  cert.b_vertices.assign(k, 0);
  cert.b_vertices[0] = L.a1;  // color 1
  cert.b_vertices[1] = L.a2;  // color 2
  cert.b_vertices[2] = L.a3;  // color 3
  for (int i = 0; i < L.n; ++i) cert.b_vertices[3 + i] = i;  // colors 4..n+3
  return cert;
}

GadgetInstance gen_star_pad_delta(const Graph& base, int c) {
  require(base.vertex_count() >= 5 && is_regular(base, 4),
          "star pad: base must be 4-regular");
  require(c >= 1, "star pad: c must be >= 1");
  std::vector<Graph> parts{base, make_star(2), make_star(2), make_star(c + 3)};
  GadgetInstance inst;
  inst.provenance = "star-pad-delta(base: n=" +
                    std::to_string(base.vertex_count()) +
                    ", c=" + std::to_string(c) + ")";
  inst.graph = make_disjoint_union(parts);
  inst.k = 3;
  confirm(inst, "delta", c + 3, degree_stats(inst.graph).delta);
  return inst;
}

GadgetInstance gen_star_pad_m(const Graph& base, int c) {
  require(base.vertex_count() >= 5 && is_regular(base, 4),
          "star pad: base must be 4-regular");
  require(c >= 1, "star pad: c must be >= 1");
  std::vector<Graph> parts{base};
  for (int i = 0; i < c + 4; ++i) parts.push_back(make_star(c + 3));
  GadgetInstance inst;
  inst.provenance = "star-pad-m(base: n=" +
                    std::to_string(base.vertex_count()) +
                    ", c=" + std::to_string(c) + ")";
  inst.graph = make_disjoint_union(parts);
  inst.k = 3;
  confirm(inst, "m_degree", c + 4, degree_stats(inst.graph).m_degree);
  return inst;
}

Graph make_path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite: both sides must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

Graph make_star(int leaves) {
  require(leaves >= 1, "star: needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph make_circulant(int n, const std::vector<int>& offsets) {
  require(n >= 3, "circulant: n must be >= 3");
  require(!offsets.empty(), "circulant: needs at least one offset");
  std::vector<std::pair<int, int>> edges;
  for (int d : offsets) {
    require(d >= 1 && d < n, "circulant: offsets must be in 1..n-1");
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + d) % n);
  }
  return Graph::from_edges(n, edges);  // duplicate orientations collapse
}

Graph make_disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const Graph& g : parts) {
    for (auto [u, v] : g.edges()) edges.emplace_back(n + u, n + v);
    n += g.vertex_count();
  }
  return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double p, std::uint32_t seed) {
  require(n >= 1, "random graph: n must be >= 1");
  require(p >= 0.0 && p <= 1.0, "random graph: p must be in [0,1]");
  std::mt19937 gen(seed);
  // fixed threshold comparison on raw 32-bit draws keeps the sequence
  // identical everywhere, unlike distribution adapters
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(p * 4294967296.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<std::uint64_t>(gen()) < threshold)
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace bcol
