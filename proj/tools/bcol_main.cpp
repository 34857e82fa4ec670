#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcol/coloring.hpp"
#include "bcol/dichotomy.hpp"
#include "bcol/dimacs.hpp"
#include "bcol/enumerate.hpp"
#include "bcol/exact.hpp"
#include "bcol/fpt.hpp"
#include "bcol/gadgets.hpp"
#include "bcol/graph.hpp"
#include "bcol/outcome.hpp"
#include "bcol/prext.hpp"
#include "bcol/solver_api.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

// exit codes: 0 yes/success, 1 no, 2 usage, 3 input/format, 4 budget, 70 bug
struct CliInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bcol::Graph load_graph(const std::string& path) {
  std::vector<std::string> warnings;
  bcol::Graph g;
  if (path == "-") {
    g = bcol::parse_dimacs(std::cin, &warnings);
  } else {
    std::ifstream in(path);
    if (!in) throw CliInputError("cannot open " + path);
    g = bcol::parse_dimacs(in, &warnings);
  }
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliInputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* answer_word(bcol::Answer a) {
  switch (a) {
    case bcol::Answer::kYes:
      return "yes";
    case bcol::Answer::kNo:
      return "no";
    default:
      return "budget-exhausted";
  }
}

ordered_json envelope(const bcol::SolveOutcome& out) {
  ordered_json j;
  j["answer"] = answer_word(out.answer);
  j["algorithm"] = out.algorithm;
  j["case"] = out.case_taken;
  j["k"] = out.k;
  j["nodes"] = out.stats.nodes;
  j["certificate"] = out.certificate ? ordered_json::parse(
                                           certificate_to_json(*out.certificate))
                                     : ordered_json(nullptr);
  return j;
}

int outcome_exit(const bcol::SolveOutcome& out) {
  switch (out.answer) {
    case bcol::Answer::kYes:
      return 0;
    case bcol::Answer::kNo:
      return 1;
    default:
      return 4;
  }
}

void emit_graph(const bcol::Graph& g, const ordered_json& sidecar,
                const std::string& out_prefix) {
  if (out_prefix.empty()) {
    std::cout << bcol::write_dimacs(g);
    std::cerr << sidecar.dump() << "\n";
    return;
  }
  std::ofstream col(out_prefix + ".col");
  if (!col) throw CliInputError("cannot write " + out_prefix + ".col");
  col << bcol::write_dimacs(g);
  std::ofstream meta(out_prefix + ".json");
  if (!meta) throw CliInputError("cannot write " + out_prefix + ".json");
  meta << sidecar.dump() << "\n";
}

ordered_json gadget_sidecar(const bcol::GadgetInstance& inst) {
  ordered_json j;
  j["k"] = inst.k;
  j["provenance"] = inst.provenance;
  ordered_json inv = ordered_json::object();
  for (const auto& [name, value] : inst.expected_invariants) inv[name] = value;
  j["invariants"] = inv;
  return j;
}

double ms_between(std::chrono::steady_clock::time_point a,
                  std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

struct BenchRow {
  std::string graph;
  int k = 0;
  std::string kernel;
  int jobs = 0;
  std::string result;
  double ms = 0;
};

void bench_graph(const std::string& name, const bcol::Graph& g, int k,
                 int jobs, std::vector<BenchRow>& rows) {
  for (int j : {1, jobs}) {
    auto t0 = std::chrono::steady_clock::now();
    auto items = bcol::enumerate_minimal_b_precolorings(g, k, j);
    auto t1 = std::chrono::steady_clock::now();
    rows.push_back({name, k, "enumerate", j,
                    std::to_string(items.size()) + " items",
                    ms_between(t0, t1)});
  }
  for (int j : {1, jobs}) {
    auto t0 = std::chrono::steady_clock::now();
    bcol::SolveOptions opts;
    opts.jobs = j;
    auto out = bcol::solve_exact(g, k, opts);
    auto t1 = std::chrono::steady_clock::now();
    rows.push_back(
        {name, k, "solve_exact", j, answer_word(out.answer), ms_between(t0, t1)});
  }
}

int run_bench(const std::string& input, int k_flag, int jobs) {
  std::vector<std::pair<std::string, bcol::Graph>> corpus;
  if (!input.empty()) {
    corpus.emplace_back(input, load_graph(input));
  } else {
    corpus.emplace_back("random(n=12,p=0.30,seed=1)",
                        bcol::random_graph(12, 0.30, 1));
    corpus.emplace_back("random(n=12,p=0.50,seed=2)",
                        bcol::random_graph(12, 0.50, 2));
    corpus.emplace_back("random(n=13,p=0.40,seed=3)",
                        bcol::random_graph(13, 0.40, 3));
    corpus.emplace_back("circulant(n=16;1,2)", bcol::make_circulant(16, {1, 2}));
  }
  std::vector<BenchRow> rows;
  for (const auto& [name, g] : corpus) {
    const int k = k_flag > 0 ? k_flag : bcol::degree_stats(g).m_degree;
    bench_graph(name, g, k, jobs, rows);
  }
  std::cout << std::left << std::setw(28) << "graph" << std::setw(4) << "k"
            << std::setw(13) << "kernel" << std::setw(6) << "jobs"
            << std::setw(18) << "result" << "ms\n";
  for (const BenchRow& r : rows)
    std::cout << std::left << std::setw(28) << r.graph << std::setw(4) << r.k
              << std::setw(13) << r.kernel << std::setw(6) << r.jobs
              << std::setw(18) << r.result << std::fixed
              << std::setprecision(1) << r.ms << "\n";
  // serial and parallel runs of one kernel must agree on the result column
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
    if (rows[i].result != rows[i + 1].result) {
      std::cerr << "mismatch between jobs=1 and jobs=" << jobs << " on "
                << rows[i].graph << " (" << rows[i].kernel << ")\n";
      return 70;
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"b-coloring solvers, enumeration, kernels, and gadgets"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string coloring_path;
  std::string algo = "auto";
  std::string mode = "auto";
  std::string out_prefix;
  int k = 0;
  int jobs = 1;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  std::uint32_t seed = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "DIMACS file, or - for stdin");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", budget_nodes,
                    "abort after this many search nodes (0 = unlimited)");
    cmd->add_option("--budget-seconds", budget_seconds,
                    "abort after this many seconds (0 = unlimited)");
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads (deterministic output)")
        ->check(CLI::Range(1, 256));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "degree invariants as JSON");
  add_input(analyze);
  analyze->add_option("-k", k, "threshold for ell_k (default: m-degree)")
      ->check(CLI::PositiveNumber);

  CLI::App* solve =
      app.add_subcommand("solve", "decide b-coloring with k colors");
  add_input(solve);
  solve->add_option("-k", k, "number of colors")
      ->required()
      ->check(CLI::Range(1, 64));
  solve->add_option("--algo", algo,
                    "auto|m|delta|m-minus-1|fpt-delta|fpt-ell|exact");
  add_jobs(solve);
  add_budget(solve);

  CLI::App* chromatic =
      app.add_subcommand("chromatic-b", "largest k with a b-coloring");
  add_input(chromatic);
  add_jobs(chromatic);
  add_budget(chromatic);

  CLI::App* enumerate =
      app.add_subcommand("enum", "stream minimal b-precolorings as JSON lines");
  add_input(enumerate);
  enumerate->add_option("-k", k, "number of colors")
      ->required()
      ->check(CLI::Range(1, 64));
  add_jobs(enumerate);
  add_budget(enumerate);

  CLI::App* kernelize =
      app.add_subcommand("kernelize", "reduce to a bounded equivalent instance");
  add_input(kernelize);
  kernelize->add_option("-k", k, "number of colors")
      ->required()
      ->check(CLI::Range(1, 64));
  kernelize->add_option("--mode", mode, "auto|m|ell (auto: m when ell_k <= k)")
      ->check(CLI::IsMember({"auto", "m", "ell"}));
  kernelize->add_option("-o", out_prefix, "write PREFIX.col and PREFIX.json");
  add_jobs(kernelize);
  add_budget(kernelize);

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  int gen_n = 0, gen_a = 0, gen_b = 0, gen_c = 1, gen_leaves = 0;
  double gen_p = 0.5;
  std::string gen_base = "-";
  std::vector<int> gen_offsets;
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("-o", out_prefix, "write PREFIX.col and PREFIX.json");
  };
  CLI::App* g_random = gen->add_subcommand("random", "Erdos-Renyi G(n,p)");
  g_random->add_option("--n", gen_n, "vertices")->required();
  g_random->add_option("--p", gen_p, "edge probability");
  g_random->add_option("--seed", seed, "RNG seed");
  add_out(g_random);
  CLI::App* g_havet = gen->add_subcommand(
      "havet", "k = n+3 instance from a 3-regular base (clique + subdivisions)");
  g_havet->add_option("--base", gen_base, "3-regular base graph (DIMACS)");
  add_out(g_havet);
  CLI::App* g_spd = gen->add_subcommand(
      "star-pad-delta", "k = 3 instance from a 4-regular base, delta = c+3");
  g_spd->add_option("--base", gen_base, "4-regular base graph (DIMACS)");
  g_spd->add_option("--c", gen_c, "pad parameter (>= 1)");
  add_out(g_spd);
  CLI::App* g_spm = gen->add_subcommand(
      "star-pad-m", "k = 3 instance from a 4-regular base, m-degree = c+4");
  g_spm->add_option("--base", gen_base, "4-regular base graph (DIMACS)");
  g_spm->add_option("--c", gen_c, "pad parameter (>= 1)");
  add_out(g_spm);
  CLI::App* g_path = gen->add_subcommand("path", "path P_n");
  g_path->add_option("--n", gen_n)->required();
  add_out(g_path);
  CLI::App* g_cycle = gen->add_subcommand("cycle", "cycle C_n");
  g_cycle->add_option("--n", gen_n)->required();
  add_out(g_cycle);
  CLI::App* g_complete = gen->add_subcommand("complete", "complete graph K_n");
  g_complete->add_option("--n", gen_n)->required();
  add_out(g_complete);
  CLI::App* g_bipartite =
      gen->add_subcommand("bipartite", "complete bipartite K_{a,b}");
  g_bipartite->add_option("--a", gen_a)->required();
  g_bipartite->add_option("--b", gen_b)->required();
  add_out(g_bipartite);
  CLI::App* g_star = gen->add_subcommand("star", "star K_{1,leaves}");
  g_star->add_option("--leaves", gen_leaves)->required();
  add_out(g_star);
  CLI::App* g_circulant =
      gen->add_subcommand("circulant", "circulant C_n(offsets)");
  g_circulant->add_option("--n", gen_n)->required();
  g_circulant->add_option("--offsets", gen_offsets, "e.g. --offsets 1 2")
      ->required();
  add_out(g_circulant);

  CLI::App* verify =
      app.add_subcommand("verify", "check a b-coloring certificate");
  add_input(verify);
  verify->add_option("-k", k, "number of colors")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--coloring", coloring_path,
                     "certificate JSON (bare or solver envelope)")
      ->required();

  CLI::App* bench = app.add_subcommand(
      "bench", "compare serial and parallel kernels on a small corpus");
  std::string bench_input;
  int bench_jobs = 4;
  bench->add_option("input", bench_input,
                    "optional DIMACS file (default: built-ins)");
  bench->add_option("-k", k, "colors (default: m-degree per graph)")
      ->check(CLI::Range(1, 64));
  bench->add_option("--jobs", bench_jobs, "parallel worker count (default 4)")
      ->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    bcol::Budget budget(budget_nodes, budget_seconds);
    bcol::SolveOptions opts;
    opts.jobs = jobs;
    opts.budget = &budget;

    if (analyze->parsed()) {
      const bcol::Graph g = load_graph(input);
      const bcol::DegreeStats ds = bcol::degree_stats(g);
      ordered_json j;
      j["n"] = g.vertex_count();
      j["edges"] = g.edge_count();
      j["delta"] = ds.delta;
      j["m_degree"] = ds.m_degree;
      j["ell_k"] = bcol::ell_k(g, k > 0 ? k : ds.m_degree);
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (solve->parsed()) {
      const bcol::Graph g = load_graph(input);
      const bcol::SolveOutcome out = bcol::solve_with_algorithm(g, k, algo, opts);
      std::cout << envelope(out).dump() << "\n";
      return outcome_exit(out);
    }

    if (chromatic->parsed()) {
      const bcol::Graph g = load_graph(input);
      if (bcol::degree_stats(g).m_degree > 64)
        throw std::invalid_argument("m-degree above 64 is unsupported");
      const bcol::BChromaticResult res = bcol::b_chromatic_number(g, opts);
      ordered_json j;
      j["chi_b"] = res.chi_b;
      j["nodes"] = res.stats.nodes;
      j["certificate"] =
          ordered_json::parse(bcol::certificate_to_json(res.certificate));
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (enumerate->parsed()) {
      const bcol::Graph g = load_graph(input);
      bcol::MinimalBPrecoloringStream stream(g, k, jobs, &budget);
      while (std::optional<bcol::Precoloring> p = stream.next()) {
        ordered_json j;
        j["k"] = k;
        ordered_json asg = ordered_json::object();
        for (int v : p->domain()) asg[std::to_string(v + 1)] = p->color(v);
        j["assignment"] = asg;
        std::cout << j.dump() << "\n";
      }
      return 0;
    }

    if (kernelize->parsed()) {
      const bcol::Graph g = load_graph(input);
      bcol::KernelMode km = bcol::KernelMode::kEll;
      if (mode == "m" || (mode == "auto" && bcol::ell_k(g, k) <= k))
        km = bcol::KernelMode::kM;
      const bcol::KernelResult res = bcol::kernelize(g, k, km, opts);
      if (res.solved) {
        std::cout << envelope(res.outcome).dump() << "\n";
        return outcome_exit(res.outcome);
      }
      ordered_json sidecar;
      sidecar["bound"] = res.size_bound;
      sidecar["k"] = res.k;
      emit_graph(res.reduced, sidecar, out_prefix);
      return 0;
    }

    if (gen->parsed()) {
      if (g_random->parsed()) {
        if (gen_p < 0 || gen_p > 1)
          throw std::invalid_argument("--p must be in [0,1]");
        const bcol::Graph g = bcol::random_graph(gen_n, gen_p, seed);
        ordered_json sidecar;
        sidecar["k"] = 0;
        std::ostringstream prov;
        prov << "random(n=" << gen_n << ",p=" << gen_p << ",seed=" << seed
             << ")";
        sidecar["provenance"] = prov.str();
        sidecar["invariants"] = ordered_json::object();
        emit_graph(g, sidecar, out_prefix);
        return 0;
      }
      bcol::GadgetInstance inst;
      if (g_havet->parsed()) {
        inst = bcol::gen_havet(load_graph(gen_base));
      } else if (g_spd->parsed()) {
        inst = bcol::gen_star_pad_delta(load_graph(gen_base), gen_c);
      } else if (g_spm->parsed()) {
        inst = bcol::gen_star_pad_m(load_graph(gen_base), gen_c);
      } else {
        inst.k = 0;
        std::ostringstream prov;
        if (g_path->parsed()) {
          inst.graph = bcol::make_path(gen_n);
          prov << "path(n=" << gen_n << ")";
        } else if (g_cycle->parsed()) {
          inst.graph = bcol::make_cycle(gen_n);
          prov << "cycle(n=" << gen_n << ")";
        } else if (g_complete->parsed()) {
          inst.graph = bcol::make_complete(gen_n);
          prov << "complete(n=" << gen_n << ")";
        } else if (g_bipartite->parsed()) {
          inst.graph = bcol::make_complete_bipartite(gen_a, gen_b);
          prov << "bipartite(a=" << gen_a << ",b=" << gen_b << ")";
        } else if (g_star->parsed()) {
          inst.graph = bcol::make_star(gen_leaves);
          prov << "star(leaves=" << gen_leaves << ")";
        } else {
          inst.graph = bcol::make_circulant(gen_n, gen_offsets);
          prov << "circulant(n=" << gen_n << ";offsets=";
          for (std::size_t i = 0; i < gen_offsets.size(); ++i)
            prov << (i ? "," : "") << gen_offsets[i];
          prov << ")";
        }
        inst.provenance = prov.str();
      }
      emit_graph(inst.graph, gadget_sidecar(inst), out_prefix);
      return 0;
    }

    if (verify->parsed()) {
      const bcol::Graph g = load_graph(input);
      bcol::BCertificate cert;
      try {
        cert = bcol::certificate_from_json(read_file(coloring_path));
      } catch (const std::invalid_argument& e) {
        throw CliInputError(e.what());
      }
      const bcol::VerifyReport report = bcol::verify_certificate(g, k, cert);
      ordered_json j;
      j["pass"] = report.pass;
      j["violations"] = report.violations;
      std::cout << j.dump() << "\n";
      return report.pass ? 0 : 1;
    }

    if (bench->parsed()) return run_bench(bench_input, k, bench_jobs);
  } catch (const bcol::DimacsError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const CliInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const bcol::BudgetExceeded&) {
    std::cerr << "budget exhausted\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 2;
}
