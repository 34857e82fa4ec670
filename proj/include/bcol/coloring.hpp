#ifndef BCOL_COLORING_HPP
#define BCOL_COLORING_HPP

#include <optional>
#include <string>
#include <vector>

#include "bcol/graph.hpp"

namespace bcol {

// Partial coloring with colors 1..k; 0 marks an uncolored vertex. Sized to a
// fixed vertex count so it pairs with one graph.
class Precoloring {
 public:
  Precoloring() = default;
  Precoloring(int k, int n);

  int k() const { return k_; }
  int size() const { return static_cast<int>(colors_.size()); }
  int color(int v) const { return colors_[v]; }
  bool colored(int v) const { return colors_[v] != 0; }
  void assign(int v, int c);  // c in 1..k; throws on out-of-range
  void clear(int v) { colors_[v] = 0; }

  std::vector<int> domain() const;  // colored vertices, ascending
  int domain_size() const;
  const std::vector<int>& raw() const { return colors_; }

  bool operator==(const Precoloring& o) const {
    return k_ == o.k_ && colors_ == o.colors_;
  }

 private:
  int k_ = 0;
  std::vector<int> colors_;
};

// No edge inside the domain is monochromatic.
bool is_proper(const Graph& g, const Precoloring& p);

// Smallest-index vertex colored `color` whose colored neighborhood shows all
// colors [k] minus {color}; absent if no such vertex.
std::optional<int> b_vertex_for(const Graph& g, const Precoloring& p, int color);

// Proper on G[domain] and every color in [k] has a b-vertex within the domain.
bool is_b_precoloring(const Graph& g, const Precoloring& p);

// b-precoloring such that no single-vertex restriction is one.
bool is_minimal_b_precoloring(const Graph& g, const Precoloring& p);

// Disjoint domains, same k; throws std::invalid_argument otherwise.
Precoloring union_precolorings(const Precoloring& a, const Precoloring& b);

Precoloring switch_colors(const Precoloring& p, int i, int j);

// Extends a proper precoloring to a total coloring, processing uncolored
// vertices in ascending order and giving each the smallest color absent from
// its colored neighborhood. Requires every uncolored vertex to have degree
// <= k-1; throws std::invalid_argument otherwise or when p is improper.
std::vector<int> greedy_extend(const Graph& g, const Precoloring& p);

struct BCertificate {
  int k = 0;
  std::vector<int> colors;      // size n, values 1..k
  std::vector<int> b_vertices;  // size k, entry i-1 = b-vertex for color i
};

// Packages a total coloring as a certificate, picking the smallest-index
// b-vertex per color. Throws std::logic_error if the coloring is not a proper
// b-coloring with colors 1..k.
BCertificate certificate_from_total(const Graph& g, int k,
                                    const std::vector<int>& colors);

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Checks shape, properness, and the b-vertex condition for every color.
VerifyReport verify_certificate(const Graph& g, int k, const BCertificate& cert);

// k = 1 and k = 2 have closed-form answers: one color needs an edgeless graph;
// two colors need a bipartite graph with at least one edge.
std::optional<BCertificate> solve_small_k(const Graph& g, int k);

// 1-based JSON wire format: {"k":K,"colors":[...],"b_vertices":[...]}.
std::string certificate_to_json(const BCertificate& cert);
BCertificate certificate_from_json(const std::string& text);

}  // namespace bcol

#endif
