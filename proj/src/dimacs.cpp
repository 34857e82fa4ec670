#include "bcol/dimacs.hpp"

#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace bcol {

namespace {

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (...) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  int lineno = 0;
  long long n = -1, declared_m = -1;
  std::set<std::pair<int, int>> edges;
  long long raw_edge_lines = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n != -1) throw DimacsError(lineno, "duplicate p line");
      std::string fmt, ntok, mtok, extra;
      if (!(ls >> fmt >> ntok >> mtok) || (ls >> extra))
        throw DimacsError(lineno, "malformed p line (expected: p edge n m)");
      if (fmt != "edge" && fmt != "col")
        throw DimacsError(lineno, "unsupported format '" + fmt + "' (expected edge)");
      long long m;
      if (!parse_int(ntok, n) || !parse_int(mtok, m) || n < 0 || m < 0)
        throw DimacsError(lineno, "malformed p line (expected: p edge n m)");
      if (n == 0) throw DimacsError(lineno, "graph must have at least one vertex");
      declared_m = m;
      continue;
    }
    if (tag == "e") {
      if (n == -1) throw DimacsError(lineno, "e line before p line");
      std::string utok, vtok, extra;
      if (!(ls >> utok >> vtok) || (ls >> extra))
        throw DimacsError(lineno, "malformed e line (expected: e u v)");
      long long u, v;
      if (!parse_int(utok, u) || !parse_int(vtok, v))
        throw DimacsError(lineno, "malformed e line (expected: e u v)");
      if (u < 1 || u > n || v < 1 || v > n)
        throw DimacsError(lineno, "endpoint out of range");
      if (u == v) throw DimacsError(lineno, "self-loop at vertex " + std::to_string(u));
      ++raw_edge_lines;
      int a = static_cast<int>(u - 1), b = static_cast<int>(v - 1);
      if (a > b) std::swap(a, b);
      if (!edges.insert({a, b}).second && warnings)
        warnings->push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                            std::to_string(u) + "-" + std::to_string(v) + " ignored");
      continue;
    }
    throw DimacsError(lineno, "malformed line (unknown tag '" + tag + "')");
  }
  if (n == -1) throw DimacsError(lineno, "missing p line");
  if (declared_m != static_cast<long long>(edges.size()) && warnings)
    warnings->push_back("declared edge count " + std::to_string(declared_m) +
                        " does not match " + std::to_string(edges.size()) +
                        " distinct parsed edges");
  std::vector<std::pair<int, int>> elist(edges.begin(), edges.end());
  return Graph::from_edges(static_cast<int>(n), elist);
}

Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

}  // namespace bcol
