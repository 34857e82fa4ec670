#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "bcol/exact.hpp"
#include "bcol/fpt.hpp"
#include "bcol/gadgets.hpp"

using namespace bcol;

namespace {

std::vector<std::pair<int, int>> pairs(const std::vector<int>& flat) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i + 1 < flat.size(); i += 2)
    out.emplace_back(flat[i], flat[i + 1]);
  return out;
}

}  // namespace

TEST_CASE("reduction rule on the spec shapes") {
  const ReductionResult p4 = apply_reduction_rule(make_path(4), 4);
  CHECK(p4.graph.vertex_count() == 0);
  CHECK(p4.removed.size() == 4);

  const ReductionResult k4 = apply_reduction_rule(make_complete(4), 4);
  CHECK(k4.graph == make_complete(4));
  CHECK(k4.removed.empty());
  CHECK(k4.orig_index == std::vector<int>{0, 1, 2, 3});

  // center degree 3 > k-2 protects the leaves; only the isolated vertex goes
  const Graph star_iso = make_disjoint_union({make_star(3), Graph(1)});
  const ReductionResult si = apply_reduction_rule(star_iso, 3);
  CHECK(si.removed == std::vector<int>{4});
  CHECK(si.graph == make_star(3));

  CHECK_THROWS_AS(apply_reduction_rule(make_path(3), 1), std::invalid_argument);
}

TEST_CASE("reduction preserves the answer on random instances") {
  for (std::uint32_t seed = 1; seed <= 30; ++seed) {
    const Graph g = random_graph(8, 0.35, seed);
    for (int k = 2; k <= 4; ++k) {
      const ReductionResult red = apply_reduction_rule(g, k);
      CHECK(solve_exact(g, k).answer == solve_exact(red.graph, k).answer);
      // removal order must be replayable: each removed vertex had a closed
      // neighborhood of degree <= k-2 at removal time
      CHECK(red.graph.vertex_count() + static_cast<int>(red.removed.size()) ==
            g.vertex_count());
    }
  }
}

TEST_CASE("every leftover low-degree vertex touches the candidate sets") {
  for (std::uint32_t seed = 1; seed <= 30; ++seed) {
    for (int k = 2; k <= 4; ++k) {
      const Graph h = apply_reduction_rule(random_graph(9, 0.4, seed), k).graph;
      const DTRPartition part = partition_dtr(h, k);
      for (int v : part.r_set) {
        bool touches = false;
        for (int w : h.neighbors(v))
          if (h.degree(w) >= k - 1) touches = true;
        CHECK(touches);
      }
    }
  }
}

TEST_CASE("scattered set on a path") {
  const Graph p9 = make_path(9);
  std::vector<int> all(9);
  for (int v = 0; v < 9; ++v) all[v] = v;
  const ScatterSet s = scattered_set(p9, all, 4);
  CHECK(s.members == std::vector<int>{0, 4, 8});
  CHECK(s.min_pairwise_distance == 4);

  CHECK(scattered_set(p9, {}, 4).members.empty());
  CHECK(scattered_set(p9, all, 1).members == all);
  CHECK_THROWS_AS(scattered_set(p9, all, 0), std::invalid_argument);
}

TEST_CASE("scattered sets are scattered and maximal") {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(10, 0.25, seed);
    std::vector<int> cand;
    for (int v = 0; v < 10; v += 2) cand.push_back(v);
    for (int dist = 2; dist <= 4; ++dist) {
      const ScatterSet s = scattered_set(g, cand, dist);
      for (std::size_t i = 0; i < s.members.size(); ++i)
        for (std::size_t j = i + 1; j < s.members.size(); ++j) {
          const auto d = bfs_distance(g, s.members[i], s.members[j]);
          CHECK((!d || *d >= dist));
        }
      for (int c : cand) {
        if (std::count(s.members.begin(), s.members.end(), c)) continue;
        bool blocked = false;
        for (int m : s.members) {
          const auto d = bfs_distance(g, c, m);
          if (d && *d < dist) blocked = true;
        }
        CHECK(blocked);
      }
    }
  }
}

TEST_CASE("injective coloring of the high-degree set") {
  // x1 = 0 (color 1), x2 = 1 (color 2); d-vertices 2,3 hang off x1, 4 off x2
  const Graph g = Graph::from_edges(5, {{0, 2}, {0, 3}, {1, 4}});
  const auto p = color_d_injective(g, {2, 3, 4}, {0, 1}, 3);
  REQUIRE(p.has_value());
  std::set<int> used;
  for (int d : {2, 3, 4}) {
    CHECK(p->colored(d));
    used.insert(p->color(d));
  }
  CHECK(used.size() == 3);  // injective
  CHECK(p->color(2) != 1);
  CHECK(p->color(3) != 1);
  CHECK(p->color(4) != 2);

  const auto single = color_d_injective(g, {2}, {0}, 3);
  REQUIRE(single.has_value());
  CHECK(single->color(2) == 2);  // smallest color not used by its anchor

  const auto empty = color_d_injective(g, {}, {0, 1}, 3);
  REQUIRE(empty.has_value());
  CHECK(empty->domain_size() == 0);

  // no color left: the lone d-vertex forbids the only color
  CHECK_FALSE(color_d_injective(g, {2}, {0}, 1).has_value());

  // a d-vertex with two anchors violates the scattering guarantee
  const Graph bad = Graph::from_edges(3, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(color_d_injective(bad, {2}, {0, 1}, 3), std::logic_error);
}

TEST_CASE("recoloring a trivial or already-injective component") {
  // x = 0 with two outside neighbors keeps its component trivial
  const Graph star2 = make_star(2);
  const RecolorOutcome alone =
      recolor_component(star2, {0}, 0, 1, {{0, 2}}, 3);
  CHECK(alone.kind == RecolorOutcome::Kind::kInjectiveNeighborhood);
  CHECK(alone.coloring == pairs({0, 1}));

  // injective start: x = 1 (degree 2) colored 1 beside one neighbor colored 2
  const Graph p3 = make_path(3);
  const RecolorOutcome inj =
      recolor_component(p3, {0, 1}, 1, 1, {{0, 2}, {1, 1}}, 3);
  CHECK(inj.kind == RecolorOutcome::Kind::kInjectiveNeighborhood);
  CHECK(inj.coloring == pairs({0, 2, 1, 1}));
}

TEST_CASE("recoloring eliminates duplicate neighbor colors") {
  // star component: center 0 with both leaves colored 2
  const Graph star2 = make_star(2);
  const RecolorOutcome out =
      recolor_component(star2, {0, 1, 2}, 0, 1, {{0, 1}, {1, 2}, {2, 2}}, 3);
  CHECK(out.kind == RecolorOutcome::Kind::kInjectiveNeighborhood);
  std::set<int> leaf_colors;
  for (auto [v, c] : out.coloring) {
    if (v == 0) CHECK(c == 1);
    else leaf_colors.insert(c);
  }
  CHECK(leaf_colors == std::set<int>{2, 3});
}

TEST_CASE("recoloring can hand the b-vertex role to an internal vertex") {
  // 0 = x (color 1), neighbors 1,2 share color 2; vertex 3 (color 3) sees
  // colors {1,2,3} in its closed neighborhood, so switching 1 and 3 makes it
  // the color-1 b-vertex inside the component
  const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {3, 4}});
  const RecolorOutcome out = recolor_component(
      g, {0, 1, 2, 3, 4}, 0, 1, {{0, 1}, {1, 2}, {2, 2}, {3, 3}, {4, 1}}, 3);
  CHECK(out.kind == RecolorOutcome::Kind::kInternalBVertex);
  CHECK(out.b_vertex == 3);
  int b_color = 0;
  for (auto [v, c] : out.coloring)
    if (v == 3) b_color = c;
  CHECK(b_color == 1);
}

TEST_CASE("recoloring validates its preconditions") {
  const Graph p3 = make_path(3);
  CHECK_THROWS_AS(recolor_component(p3, {0, 1}, 0, 1, {{0, 1}, {1, 1}}, 3),
                  std::invalid_argument);  // improper start
  CHECK_THROWS_AS(recolor_component(p3, {0, 1}, 0, 1, {{0, 1}}, 3),
                  std::invalid_argument);  // start misses a component vertex
  CHECK_THROWS_AS(recolor_component(p3, {0, 1}, 2, 1, {{0, 1}, {1, 2}}, 3),
                  std::invalid_argument);  // x outside the component
  CHECK_THROWS_AS(recolor_component(p3, {0, 1}, 0, 1, {{0, 1}, {1, 2}}, 4),
                  std::invalid_argument);  // deg(x) != k-1
}

TEST_CASE("fpt solver for the low-candidate regime") {
  const Graph stars = make_disjoint_union({make_star(2), make_star(2), make_star(2)});
  const SolveOutcome yes = solve_m_param_delta(stars, 3);
  CHECK(yes.answer == Answer::kYes);
  CHECK(yes.case_taken == "case2-construct");
  REQUIRE(yes.certificate.has_value());
  CHECK(verify_certificate(stars, 3, *yes.certificate).pass);
  CHECK_FALSE(yes.stats.used_fallback);

  const SolveOutcome no = solve_m_param_delta(make_cycle(4), 3);
  CHECK(no.answer == Answer::kNo);
  CHECK(no.case_taken == "case1-kernel");

  const SolveOutcome p5 = solve_m_param_delta(make_path(5), 3);
  CHECK(p5.answer == Answer::kYes);
  CHECK(verify_certificate(make_path(5), 3, *p5.certificate).pass);

  CHECK_THROWS_AS(solve_m_param_delta(make_complete(4), 2),
                  std::invalid_argument);  // ell_2 = 4 > 2
}

TEST_CASE("fpt solver lifts certificates over removed vertices") {
  // the rule deletes the isolated edge, the cycle keeps its b-coloring, and
  // the lift must recolor the deleted pair consistently
  const Graph g = make_disjoint_union({make_cycle(5), make_path(2)});
  CHECK(degree_stats(g).m_degree == 3);
  const SolveOutcome out = solve_m_param_delta(g, 3);
  CHECK(out.answer == Answer::kYes);
  REQUIRE(out.certificate.has_value());
  CHECK(static_cast<int>(out.certificate->colors.size()) == 7);
  CHECK(verify_certificate(g, 3, *out.certificate).pass);
}

TEST_CASE("fpt m-route matches the oracle wherever it applies") {
  for (std::uint32_t seed = 1; seed <= 25; ++seed) {
    const Graph g = random_graph(4 + seed % 6, 0.4, seed);
    const int delta = degree_stats(g).delta;
    for (int k = 1; k <= delta + 2; ++k) {
      if (ell_k(g, k) > k) continue;
      const SolveOutcome out = solve_m_param_delta(g, k);
      CHECK(out.answer == solve_exact(g, k).answer);
      if (out.certificate) CHECK(verify_certificate(g, k, *out.certificate).pass);
    }
  }
}

TEST_CASE("fpt solver for many high-degree vertices") {
  // four clique vertices and five star centers exceed ell_3 <= 3, forcing
  // the main route; the answer tracks 3-colorability of the clique part
  const Graph hard = make_disjoint_union({make_complete(4), make_star(4),
                                          make_star(4), make_star(4),
                                          make_star(4), make_star(4)});
  CHECK(ell_k(hard, 3) == 9);
  const SolveOutcome no = solve_delta_ell(hard, 3);
  CHECK(no.answer == Answer::kNo);
  CHECK(no.algorithm == "fpt-ell");

  const Graph easy = make_disjoint_union({make_cycle(6), make_star(4),
                                          make_star(4), make_star(4),
                                          make_star(4), make_star(4)});
  const SolveOutcome yes = solve_delta_ell(easy, 3);
  CHECK(yes.answer == Answer::kYes);
  REQUIRE(yes.certificate.has_value());
  CHECK(verify_certificate(easy, 3, *yes.certificate).pass);
}

TEST_CASE("fpt ell-route dispatches") {
  const SolveOutcome c8 = solve_delta_ell(make_cycle(8), 3);
  CHECK(c8.answer == Answer::kYes);
  CHECK(c8.case_taken.rfind("dispatch-ell-le-k/", 0) == 0);

  // k above delta+1 always lands in the ell <= k dispatch (ell_k = 0 there)
  const SolveOutcome trivial_no = solve_delta_ell(make_path(4), 5);
  CHECK(trivial_no.answer == Answer::kNo);
  CHECK(trivial_no.case_taken.rfind("dispatch-ell-le-k/", 0) == 0);

  const SolveOutcome small = solve_delta_ell(make_complete_bipartite(3, 3), 2);
  CHECK(small.answer == Answer::kYes);
  CHECK(small.case_taken == "dispatch-small-k");
  CHECK(verify_certificate(make_complete_bipartite(3, 3), 2, *small.certificate)
            .pass);
}

TEST_CASE("fpt ell-route matches the oracle everywhere") {
  for (std::uint32_t seed = 1; seed <= 25; ++seed) {
    const Graph g = random_graph(4 + seed % 5, 0.45, seed);
    const int delta = degree_stats(g).delta;
    for (int k = 1; k <= delta + 2; ++k) {
      const SolveOutcome out = solve_delta_ell(g, k);
      CHECK(out.answer == solve_exact(g, k).answer);
      if (out.certificate) CHECK(verify_certificate(g, k, *out.certificate).pass);
    }
  }
}

TEST_CASE("kernelization outcomes") {
  const KernelResult c4 = kernelize(make_cycle(4), 3, KernelMode::kM);
  CHECK_FALSE(c4.solved);
  CHECK(c4.reduced == make_cycle(4));
  CHECK(c4.k == 3);
  CHECK(c4.size_bound == 186);  // 2k + 2k*delta*(1+2+4+8) at k=3, delta=2
  CHECK(c4.reduced.vertex_count() <= static_cast<int>(c4.size_bound));

  const KernelResult p4 = kernelize(make_path(4), 4, KernelMode::kM);
  CHECK(p4.solved);
  CHECK(p4.outcome.answer == Answer::kNo);

  const Graph stars = make_disjoint_union({make_star(2), make_star(2), make_star(2)});
  const KernelResult solved = kernelize(stars, 3, KernelMode::kM);
  CHECK(solved.solved);
  CHECK(solved.outcome.answer == Answer::kYes);
  CHECK(verify_certificate(stars, 3, *solved.outcome.certificate).pass);

  CHECK_THROWS_AS(kernelize(make_complete(4), 2, KernelMode::kM),
                  std::invalid_argument);
  CHECK_THROWS_AS(kernelize(make_path(3), 0, KernelMode::kM),
                  std::invalid_argument);
}

TEST_CASE("kernels stay equivalent and within their bounds") {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(4 + seed % 6, 0.4, seed);
    const int delta = degree_stats(g).delta;
    for (int k = 2; k <= delta + 1; ++k) {
      for (KernelMode mode : {KernelMode::kM, KernelMode::kEll}) {
        if (mode == KernelMode::kM && ell_k(g, k) > k) continue;
        const KernelResult res = kernelize(g, k, mode);
        const Answer truth = solve_exact(g, k).answer;
        if (res.solved) {
          CHECK(res.outcome.answer == truth);
        } else {
          CHECK(res.reduced.vertex_count() <= static_cast<int>(res.size_bound));
          CHECK(solve_exact(res.reduced, k).answer == truth);
        }
      }
    }
  }
}

TEST_CASE("fpt budget exhaustion surfaces as an outcome") {
  Budget tiny(2, 0);
  SolveOptions opts;
  opts.budget = &tiny;
  const SolveOutcome out = solve_m_param_delta(make_cycle(4), 3, opts);
  CHECK(out.answer == Answer::kBudgetExhausted);
}
