#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "bcol/coloring.hpp"
#include "bcol/gadgets.hpp"
#include "bcol/graph.hpp"

using namespace bcol;

namespace {

Precoloring make(int k, int n, std::vector<std::pair<int, int>> assigned) {
  Precoloring p(k, n);
  for (auto [v, c] : assigned) p.assign(v, c);
  return p;
}

}  // namespace

TEST_CASE("precoloring basics") {
  Precoloring p(3, 4);
  CHECK(p.domain().empty());
  p.assign(2, 3);
  CHECK(p.colored(2));
  CHECK(p.color(2) == 3);
  CHECK(p.domain() == std::vector<int>{2});
  CHECK(p.domain_size() == 1);
  CHECK_THROWS_AS(p.assign(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(p.assign(0, 0), std::invalid_argument);
  p.clear(2);
  CHECK_FALSE(p.colored(2));
}

TEST_CASE("properness on the colored subgraph") {
  const Graph k3 = make_complete(3);
  CHECK(is_proper(k3, make(3, 3, {{0, 1}, {1, 2}, {2, 3}})));
  CHECK_FALSE(is_proper(k3, make(3, 3, {{0, 1}, {1, 1}, {2, 2}})));
  CHECK(is_proper(make_cycle(4), make(2, 4, {{0, 1}, {2, 1}})));
}

TEST_CASE("b-vertex lookup") {
  const Graph p5 = make_path(5);
  Precoloring p = make(3, 5, {{0, 3}, {1, 1}, {2, 2}, {3, 3}, {4, 1}});
  CHECK(b_vertex_for(p5, p, 2) == 2);
  CHECK(b_vertex_for(p5, p, 1) == 1);
  CHECK(b_vertex_for(p5, p, 3) == 3);

  const Graph k33 = make_complete_bipartite(3, 3);
  Precoloring q = make(3, 6, {{0, 1}, {1, 2}, {2, 1}, {3, 3}, {4, 3}, {5, 3}});
  CHECK_FALSE(b_vertex_for(k33, q, 1).has_value());

  const Graph single = Graph(1);
  CHECK(b_vertex_for(single, make(1, 1, {{0, 1}}), 1) == 0);
}

TEST_CASE("b-precoloring recognition and minimality") {
  const Graph p3 = make_path(3);
  CHECK(is_b_precoloring(p3, make(2, 3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_b_precoloring(p3, make(2, 3, {{0, 1}})));
  CHECK(is_b_precoloring(make_complete(3), make(3, 3, {{0, 1}, {1, 2}, {2, 3}})));

  CHECK(is_minimal_b_precoloring(p3, make(2, 3, {{0, 1}, {1, 2}})));
  // restriction to {1,2} is still a b-precoloring, so not minimal
  CHECK_FALSE(is_minimal_b_precoloring(p3, make(2, 3, {{0, 2}, {1, 1}, {2, 2}})));
  CHECK_FALSE(is_minimal_b_precoloring(p3, make(2, 3, {{0, 1}})));

  const Graph k3 = make_complete(3);
  CHECK(is_minimal_b_precoloring(k3, make(2, 3, {{0, 1}, {1, 2}})));
}

TEST_CASE("minimal b-precoloring domains stay within k squared") {
  for (std::uint32_t seed = 1; seed <= 40; ++seed) {
    const Graph g = random_graph(8, 0.45, seed);
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 40; ++trial) {
      const int k = 1 + rng() % 4;
      Precoloring p(k, 8);
      for (int v = 0; v < 8; ++v)
        if (int c = rng() % (k + 1); c > 0) p.assign(v, c);
      if (is_minimal_b_precoloring(g, p)) CHECK(p.domain_size() <= k * k);
    }
  }
}

TEST_CASE("union of precolorings requires disjoint domains") {
  Precoloring a = make(2, 3, {{0, 1}});
  Precoloring b = make(2, 3, {{1, 2}});
  const Precoloring u = union_precolorings(a, b);
  CHECK(u.color(0) == 1);
  CHECK(u.color(1) == 2);
  CHECK(union_precolorings(a, Precoloring(2, 3)) == a);
  CHECK_THROWS_AS(union_precolorings(a, make(2, 3, {{0, 2}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(union_precolorings(a, make(3, 3, {{1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("switching colors") {
  const Precoloring p = make(3, 3, {{0, 1}, {1, 2}, {2, 3}});
  const Precoloring s = switch_colors(p, 1, 2);
  CHECK(s.color(0) == 2);
  CHECK(s.color(1) == 1);
  CHECK(s.color(2) == 3);
  CHECK(switch_colors(p, 2, 2) == p);
  CHECK(switch_colors(s, 1, 2) == p);
}

TEST_CASE("switching colors preserves properness both ways") {
  for (std::uint32_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_graph(9, 0.4, seed);
    std::mt19937 rng(seed ^ 0x9e3779b9u);
    Precoloring p(4, 9);
    for (int v = 0; v < 9; ++v)
      if (int c = rng() % 5; c > 0) p.assign(v, c);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        CHECK(is_proper(g, p) == is_proper(g, switch_colors(p, i, j)));
  }
}

TEST_CASE("greedy extension") {
  const Graph p5 = make_path(5);
  const std::vector<int> total = greedy_extend(p5, make(3, 5, {{2, 2}}));
  CHECK(total == std::vector<int>{1, 3, 2, 1, 2});

  const Precoloring full = make(2, 2, {{0, 1}, {1, 2}});
  CHECK(greedy_extend(make_path(2), full) == std::vector<int>{1, 2});

  // uncolored vertex of degree 3 with k = 3 violates the degree bound
  CHECK_THROWS_AS(greedy_extend(make_complete(4), make(3, 4, {{0, 1}})),
                  std::invalid_argument);
  // improper inputs are rejected, not silently extended
  CHECK_THROWS_AS(greedy_extend(make_path(2), make(2, 2, {{0, 1}, {1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("greedy extension is proper on random instances") {
  std::mt19937 rng(7);
  int tested = 0;
  for (std::uint32_t seed = 1; tested < 1000; ++seed) {
    const Graph g = random_graph(10, 0.35, seed);
    const int k = 2 + rng() % 4;
    Precoloring p(k, 10);
    for (int v = 0; v < 10; ++v)
      if (rng() % 3 == 0) {
        std::vector<int> free;
        for (int c = 1; c <= k; ++c) {
          bool ok = true;
          for (int w : g.neighbors(v))
            if (p.colored(w) && p.color(w) == c) ok = false;
          if (ok) free.push_back(c);
        }
        if (!free.empty()) p.assign(v, free[rng() % free.size()]);
      }
    bool degree_ok = true;
    for (int v = 0; v < 10; ++v)
      if (!p.colored(v) && g.degree(v) > k - 1) degree_ok = false;
    if (!degree_ok) continue;
    const std::vector<int> total = greedy_extend(g, p);
    Precoloring q(k, 10);
    for (int v = 0; v < 10; ++v) q.assign(v, total[v]);
    CHECK(is_proper(g, q));
    for (int v : p.domain()) CHECK(total[v] == p.color(v));
    ++tested;
  }
}

TEST_CASE("certificates from total colorings") {
  const Graph p5 = make_path(5);
  const BCertificate cert = certificate_from_total(p5, 3, {3, 1, 2, 3, 1});
  CHECK(cert.k == 3);
  CHECK(cert.b_vertices == std::vector<int>{1, 2, 3});
  CHECK(verify_certificate(p5, 3, cert).pass);

  CHECK_THROWS_AS(certificate_from_total(p5, 3, {1, 2, 1, 2, 1}),
                  std::logic_error);  // no b-vertex for color 3
  CHECK_THROWS_AS(certificate_from_total(p5, 3, {3, 3, 2, 3, 1}),
                  std::logic_error);  // improper
  CHECK_THROWS_AS(certificate_from_total(p5, 3, {3, 1, 2, 3}),
                  std::logic_error);  // wrong size
}

TEST_CASE("certificate verification reports each violated clause") {
  const Graph c5 = make_cycle(5);
  BCertificate good{3, {1, 2, 1, 2, 3}, {0, 3, 4}};
  CHECK(verify_certificate(c5, 3, good).pass);

  const Graph c4 = make_cycle(4);
  BCertificate bad{3, {1, 2, 1, 3}, {0, 1, 3}};
  const VerifyReport rep = verify_certificate(c4, 3, bad);
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.violations.empty());

  BCertificate wrong_k{2, {1, 2, 1, 2}, {0, 1}};
  CHECK_FALSE(verify_certificate(c4, 3, wrong_k).pass);
  BCertificate improper{3, {1, 1, 1, 3}, {0, 1, 3}};
  CHECK_FALSE(verify_certificate(c4, 3, improper).pass);
}

TEST_CASE("small k closed forms") {
  CHECK(solve_small_k(Graph(3), 1).has_value());
  CHECK_FALSE(solve_small_k(make_path(2), 1).has_value());
  const auto two = solve_small_k(make_cycle(4), 2);
  REQUIRE(two.has_value());
  CHECK(verify_certificate(make_cycle(4), 2, *two).pass);
  CHECK_FALSE(solve_small_k(make_cycle(5), 2).has_value());   // odd cycle
  CHECK_FALSE(solve_small_k(Graph(3), 2).has_value());        // no edge
  const auto star = solve_small_k(make_star(4), 2);
  REQUIRE(star.has_value());
  CHECK(verify_certificate(make_star(4), 2, *star).pass);
}

TEST_CASE("certificate json round-trip") {
  const BCertificate cert{3, {3, 1, 2, 3, 1}, {1, 2, 3}};
  const std::string wire = certificate_to_json(cert);
  CHECK(wire ==
        R"({"k":3,"colors":[3,1,2,3,1],"b_vertices":[2,3,4]})");
  const BCertificate back = certificate_from_json(wire);
  CHECK(back.k == cert.k);
  CHECK(back.colors == cert.colors);
  CHECK(back.b_vertices == cert.b_vertices);

  // envelope form unwraps
  const BCertificate env = certificate_from_json(
      R"({"answer":"yes","certificate":{"k":3,"colors":[3,1,2,3,1],"b_vertices":[2,3,4]}})");
  CHECK(env.colors == cert.colors);

  CHECK_THROWS_AS(certificate_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(certificate_from_json(R"({"k":3})"), std::invalid_argument);
}
