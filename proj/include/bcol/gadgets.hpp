#ifndef BCOL_GADGETS_HPP
#define BCOL_GADGETS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bcol/coloring.hpp"
#include "bcol/graph.hpp"

namespace bcol {

struct GadgetInstance {
  Graph graph;
  int k = 0;
  std::string provenance;
  std::vector<std::pair<std::string, long long>> expected_invariants;  // verified at construction
};

// From a 3-regular base on n >= 4 vertices: clique v_0..v_{n-1}, one
// subdivision vertex per base edge, plus a disjoint block
// K_{n,n+3} + K_{2,n+3} + K_{2,n+3}; ask for k = n+3 colors. The instance has
// a b-coloring with n+3 colors iff the base is 3-edge-colorable.
GadgetInstance gen_havet(const Graph& base);

// The YES-direction witness: builds the b-coloring of gen_havet(base) induced
// by a proper 3-edge-coloring of the base (edge_colors indexed as
// base.edges(), values 1..3).
BCertificate havet_forward_certificate(const Graph& base,
                                       const std::vector<int>& edge_colors);

// From a 4-regular base: base + two K_{1,2} + one K_{1,c+3}, k = 3;
// Delta grows with c while the answer stays "base 3-colorable?".
GadgetInstance gen_star_pad_delta(const Graph& base, int c);

// From a 4-regular base: base + (c+4) copies of K_{1,c+3}, k = 3;
// m-degree grows with c while the answer stays "base 3-colorable?".
GadgetInstance gen_star_pad_m(const Graph& base, int c);

Graph make_path(int n);                       // n >= 1
Graph make_cycle(int n);                      // n >= 3
Graph make_complete(int n);                   // n >= 1
Graph make_complete_bipartite(int a, int b);  // a, b >= 1
Graph make_star(int leaves);                  // K_{1,leaves}, leaves >= 1
Graph make_circulant(int n, const std::vector<int>& offsets);
Graph make_disjoint_union(const std::vector<Graph>& parts);

// Erdos-Renyi style: each pair independently with probability p, driven by a
// seeded mt19937 consuming one draw per pair in row order, so the result is
// identical across platforms.
Graph random_graph(int n, double p, std::uint32_t seed);

}  // namespace bcol

#endif
