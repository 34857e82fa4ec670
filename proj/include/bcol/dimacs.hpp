#ifndef BCOL_DIMACS_HPP
#define BCOL_DIMACS_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcol/graph.hpp"

namespace bcol {

struct DimacsError : std::runtime_error {
  DimacsError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

// DIMACS coloring format: optional `c` comments, one `p edge N M` line, then
// `e u v` lines with 1-based endpoints. Duplicate edges (either orientation)
// collapse with a warning; self-loops and out-of-range endpoints are errors.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string write_dimacs(const Graph& g);

}  // namespace bcol

#endif
