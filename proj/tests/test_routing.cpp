#include <string>
#include <vector>

#include "doctest.h"

#include "bcol/exact.hpp"
#include "bcol/gadgets.hpp"
#include "bcol/solver_api.hpp"

using namespace bcol;

TEST_CASE("route selection follows the documented order") {
  CHECK(select_algorithm(make_cycle(4), 2) == "delta");  // m = 3, delta = 2
  CHECK(select_algorithm(make_path(5), 3) == "m");
  CHECK(select_algorithm(make_cycle(4), 3) == "m");

  // m = delta = 2: the tie resolves to "m"
  const Graph tie = make_star(2);
  CHECK(degree_stats(tie).m_degree == degree_stats(tie).delta);
  CHECK(select_algorithm(tie, 2) == "m");

  CHECK(select_algorithm(make_star(5), 1) == "m-minus-1");  // m = 2, delta = 5
  CHECK(select_algorithm(make_star(5), 6) == "fpt-delta");  // k = delta + 1
  CHECK(select_algorithm(make_cycle(6), 4) == "fpt-delta");  // ell_4 = 0

  const Graph many = make_disjoint_union({make_complete(4), make_star(4),
                                          make_star(4), make_star(4),
                                          make_star(4), make_star(4)});
  // m = 5, delta = 4, ell_3 = 9 > 3: nothing else fits k = 3
  CHECK(select_algorithm(many, 3) == "fpt-ell");

  CHECK_THROWS_AS(select_algorithm(Graph(), 2), std::invalid_argument);
  CHECK_THROWS_AS(select_algorithm(make_path(3), 0), std::invalid_argument);
}

TEST_CASE("dispatch validates the requested combination") {
  const Graph k4 = make_complete(4);
  const SolveOutcome out = solve_with_algorithm(k4, 4, "auto");
  CHECK(out.answer == Answer::kYes);
  CHECK(out.algorithm == "m");

  CHECK(solve_with_algorithm(k4, 4, "m").answer == Answer::kYes);
  CHECK(solve_with_algorithm(k4, 3, "delta").answer == Answer::kNo);
  CHECK(solve_with_algorithm(k4, 3, "m-minus-1").answer == Answer::kNo);
  CHECK(solve_with_algorithm(k4, 4, "exact").answer == Answer::kYes);

  CHECK_THROWS_AS(solve_with_algorithm(k4, 3, "m"), std::invalid_argument);
  CHECK_THROWS_AS(solve_with_algorithm(k4, 4, "delta"), std::invalid_argument);
  CHECK_THROWS_AS(solve_with_algorithm(k4, 2, "m-minus-1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_with_algorithm(k4, 2, "fpt-delta"),
                  std::invalid_argument);  // ell_2 = 4 > 2
  CHECK_THROWS_AS(solve_with_algorithm(k4, 3, "newton"), std::invalid_argument);
  CHECK_THROWS_AS(solve_with_algorithm(k4, 0, "auto"), std::invalid_argument);
}

TEST_CASE("every applicable route agrees on the answer") {
  for (std::uint32_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(4 + seed % 5, 0.45, seed);
    const DegreeStats ds = degree_stats(g);
    for (int k = 1; k <= ds.delta + 2; ++k) {
      const Answer truth = solve_exact(g, k).answer;
      std::vector<std::string> routes = {"fpt-ell"};
      if (k == ds.m_degree) routes.push_back("m");
      if (k == ds.delta && ds.delta >= 1) routes.push_back("delta");
      if (k == ds.m_degree - 1 && ds.m_degree >= 2)
        routes.push_back("m-minus-1");
      if (ell_k(g, k) <= k) routes.push_back("fpt-delta");
      for (const std::string& route : routes) {
        const SolveOutcome out = solve_with_algorithm(g, k, route);
        CHECK(out.answer == truth);
        if (out.certificate)
          CHECK(verify_certificate(g, k, *out.certificate).pass);
      }
      // and the automatic route picks one of the valid ones
      CHECK(solve_with_algorithm(g, k, "auto").answer == truth);
    }
  }
}
