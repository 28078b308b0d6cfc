#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "scss/cost.h"
#include "scss/counterexample.h"
#include "scss/hardness.h"
#include "scss/instance_io.h"
#include "scss/oracle.h"
#include "scss/random_instance.h"
#include "scss/solution_io.h"
#include "scss/solver.h"
#include "scss/structure.h"
#include "scss/transforms.h"

namespace {

using namespace scss;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInvalid = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::chrono::duration<double>> time_budget() {
  const char* raw = std::getenv("SCSS_TIME_BUDGET_SECS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double seconds = std::strtod(raw, &end);
  if (*end != '\0' || !(seconds > 0)) throw UsageError(std::string("SCSS_TIME_BUDGET_SECS must be a positive number, got '") + raw + "'");
  return std::chrono::duration<double>(seconds);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path)); }

int run_solve(const std::string& file, bool json) {
  const Instance instance = load_instance(file);
  if (instance.k2 != 1) throw UsageError("solve handles k2 = 1 only; use `oracle` for k2 > 1");
  SearchOptions options;
  if (const auto budget = time_budget()) {
    options.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(*budget);
  }
  const SolveResult result = solve(instance, options);
  const char* status = result.status == SolveStatus::kSolved       ? "solved"
                       : result.status == SolveStatus::kInfeasible ? "infeasible"
                                                                   : "budget_exceeded";
  if (json) {
    nlohmann::json out = {{"status", status},
                          {"stats",
                           {{"states_discovered", result.stats.states_discovered},
                            {"states_settled", result.stats.states_settled},
                            {"moves_generated", result.stats.moves_generated}}}};
    if (result.solution) {
      out["cost"] = result.solution->cost;
      out["solution"] = solution_to_json(instance.graph, *result.solution);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "# status " << status << "\n";
    if (result.solution) std::cout << serialize_solution(instance.graph, *result.solution);
    std::cout << "# states discovered " << result.stats.states_discovered << ", settled "
              << result.stats.states_settled << "\n";
  }
  switch (result.status) {
    case SolveStatus::kSolved:
      return kExitOk;
    case SolveStatus::kInfeasible:
      std::cerr << "scss: instance is infeasible\n";
      return kExitInfeasible;
    case SolveStatus::kBudgetExceeded:
      std::cerr << "scss: time budget exceeded\n";
      return kExitBudget;
  }
  return kExitOk;
}

int run_oracle(const std::string& file, bool enumerate, std::size_t max_paths, bool json) {
  const Instance instance = load_instance(file);
  OracleLimits limits;
  limits.max_paths = max_paths;
  if (const auto budget = time_budget()) {
    limits.time_budget = std::chrono::duration_cast<std::chrono::milliseconds>(*budget);
  }
  OracleStatus status;
  Weight cost = 0;
  std::size_t reached = 0;
  std::vector<Solution> optima;
  if (enumerate) {
    EnumerateResult r = oracle_enumerate_optima(instance, limits);
    status = r.status;
    cost = r.cost;
    reached = r.count_reached;
    optima = std::move(r.optima);
  } else {
    const OracleResult r = oracle_opt(instance, limits);
    status = r.status;
    cost = r.cost;
    reached = r.count_reached;
  }
  const char* label = status == OracleStatus::kOptimal      ? "optimal"
                      : status == OracleStatus::kInfeasible ? "infeasible"
                                                            : "limit_exceeded";
  if (json) {
    nlohmann::json out = {{"status", label}, {"count_reached", reached}};
    if (status == OracleStatus::kOptimal) out["cost"] = cost;
    if (enumerate) {
      out["optima"] = nlohmann::json::array();
      for (const Solution& s : optima) out["optima"].push_back(solution_to_json(instance.graph, s));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "status " << label << "\n";
    if (status == OracleStatus::kOptimal) std::cout << "cost " << cost << "\n";
    if (enumerate && status == OracleStatus::kOptimal) {
      std::cout << "optima " << optima.size() << "\n";
      for (std::size_t i = 0; i < optima.size(); ++i) {
        std::cout << "# optimum " << i << "\n" << serialize_solution(instance.graph, optima[i]);
      }
    }
  }
  if (status == OracleStatus::kInfeasible) return kExitInfeasible;
  if (status == OracleStatus::kLimitExceeded) {
    std::cerr << "scss: oracle limit exceeded after " << reached << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

int run_verify(const std::string& file, const std::string& solution_file) {
  const Instance instance = load_instance(file);
  Solution solution;
  try {
    solution = parse_solution(instance.graph, read_text_file(solution_file));
  } catch (const WalkError& e) {
    std::cout << "invalid\n" << "violation " << e.what() << "\n";
    return kExitInvalid;
  }
  const Verdict verdict = verify(instance, solution);
  std::cout << (verdict.ok ? "ok" : "invalid") << "\n";
  std::cout << "reported_cost " << verdict.reported_cost << "\n";
  if (verdict.recomputed_cost) std::cout << "recomputed_cost " << *verdict.recomputed_cost << "\n";
  for (const std::string& v : verdict.violations) std::cout << "violation " << v << "\n";
  return verdict.ok ? kExitOk : kExitInvalid;
}

int run_check_structure(const std::string& file, const std::string& solution_file) {
  const Instance instance = load_instance(file);
  const Solution solution = parse_solution(instance.graph, read_text_file(solution_file));
  for (std::size_t j = 0; j < solution.backward.size(); ++j) {
    const Walk& b = solution.backward[j];
    for (std::size_t i = 0; i < solution.forward.size(); ++i) {
      const Walk& f = solution.forward[i];
      std::cout << "pair forward[" << i << "] backward[" << j << "] shared " << shared_subpaths(f, b).size()
                << " path_reverse_compatible " << (is_path_reverse_compatible(f, b) ? "yes" : "no") << "\n";
    }
    std::cout << "backward[" << j << "] rank " << rank(solution.forward, b) << " reverse_compatible "
              << (is_reverse_compatible(solution.forward, b) ? "yes" : "no") << "\n";
  }
  std::cout << "general_reverse_compatible "
            << (is_general_reverse_compatible(solution.forward, solution.backward) ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_gen_gridtiling(int k, int n, const std::string& clique_file, const std::string& out,
                       const std::string& cert_out) {
  if (clique_file.empty() && n < 1) throw UsageError("--n is required without --from-clique");
  const SimpleGraph source = clique_file.empty() ? complete_graph(n) : parse_simple_graph(read_text_file(clique_file));
  const HardnessInstance hard = gridtiling_to_scss(clique_to_gridtiling(source, k));
  std::ostringstream header;
  header << "# grid tiling reduction k=" << k << " n=" << source.n << " beta=" << hard.params.beta
         << " alpha=" << hard.params.alpha << "\n";
  emit(header.str() + serialize_instance(hard.instance), out);
  std::string cert_path = cert_out;
  if (cert_path.empty() && !out.empty() && out != "-") cert_path = out + ".cert.json";
  if (!cert_path.empty()) emit(certificate_json(hard).dump(2) + "\n", cert_path);
  return kExitOk;
}

std::string to_dot(const Instance& instance, const std::optional<Solution>& solution) {
  const Digraph& g = instance.graph;
  std::vector<std::size_t> fwd(g.num_edges(), 0);
  std::vector<std::size_t> bwd(g.num_edges(), 0);
  if (solution) {
    for (const Walk& w : solution->forward) {
      for (EdgeId e : w.edges) ++fwd[e];
    }
    for (const Walk& w : solution->backward) {
      for (EdgeId e : w.edges) ++bwd[e];
    }
  }
  std::ostringstream out;
  out << "digraph scss {\n";
  out << "  " << instance.s << " [label=\"s\", shape=doublecircle];\n";
  out << "  " << instance.t << " [label=\"t\", shape=doublecircle];\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    out << "  " << edge.tail << " -> " << edge.head << " [label=\"" << edge.weight << "\"";
    if (fwd[e] > 0 && bwd[e] > 0) {
      out << ", color=purple, penwidth=3";
    } else if (fwd[e] > 0) {
      out << ", color=blue, penwidth=2";
    } else if (bwd[e] > 0) {
      out << ", color=red, penwidth=2";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and instance tools for 2-SCSS-(k1,k2)"};
  app.require_subcommand(1);

  std::string file;
  std::string solution_file;
  std::string out;
  bool json = false;

  auto* solve_cmd = app.add_subcommand("solve", "Exact optimum for k2 = 1 via the token game");
  solve_cmd->add_option("FILE", file, "Instance file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_flag("--json", json, "Structured output");

  bool enumerate = false;
  std::size_t max_paths = OracleLimits{}.max_paths;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum for any demands");
  oracle_cmd->add_option("FILE", file, "Instance file")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_flag("--enumerate", enumerate, "List every optimum");
  oracle_cmd->add_option("--max-paths", max_paths, "Cap on enumerated simple paths")->check(CLI::PositiveNumber);
  oracle_cmd->add_flag("--json", json, "Structured output");

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against an instance");
  verify_cmd->add_option("FILE", file, "Instance file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("SOLUTIONFILE", solution_file, "Solution file")->required()->check(CLI::ExistingFile);

  auto* structure_cmd = app.add_subcommand("check-structure", "Reverse-compatibility report for a solution");
  structure_cmd->add_option("FILE", file, "Instance file")->required()->check(CLI::ExistingFile);
  structure_cmd->add_option("SOLUTIONFILE", solution_file, "Solution file")->required()->check(CLI::ExistingFile);

  auto* gen_cmd = app.add_subcommand("gen", "Instance generators");
  gen_cmd->require_subcommand(1);
  RandomInstanceSpec spec;
  auto* random_cmd = gen_cmd->add_subcommand("random", "Seeded random instance");
  random_cmd->add_option("--n", spec.n, "Vertices")->check(CLI::Range(2, 1'000'000));
  random_cmd->add_option("--m", spec.m, "Edges");
  random_cmd->add_option("--wmax", spec.max_weight, "Maximum edge weight");
  random_cmd->add_option("--k1", spec.k1, "Forward demand")->check(CLI::Range(1, 1'000'000));
  random_cmd->add_option("--k2", spec.k2, "Backward demand")->check(CLI::Range(1, 1'000'000));
  random_cmd->add_option("--seed", spec.seed, "Generator seed");
  random_cmd->add_flag("--strongly-connected", spec.strongly_connected, "Start from a Hamiltonian cycle");
  random_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  int k = 2;
  int n = 0;
  std::string clique_file;
  std::string cert_out;
  auto* grid_cmd = gen_cmd->add_subcommand("gridtiling", "Hardness instance from a Clique source via Grid Tiling");
  grid_cmd->add_option("--k", k, "Clique size")->required()->check(CLI::Range(1, 64));
  grid_cmd->add_option("--n", n, "Source vertices (complete graph K_n unless --from-clique)")
      ->check(CLI::Range(1, GadgetParams::kMaxN));
  grid_cmd->add_option("--from-clique", clique_file, "Source graph file ('graph n m' + 'e a b' lines)")
      ->check(CLI::ExistingFile);
  grid_cmd->add_option("-o,--output", out, "Output file (default stdout)");
  grid_cmd->add_option("--cert", cert_out, "Certificate file (default OUTPUT.cert.json)");

  auto* counter_cmd = gen_cmd->add_subcommand("counterexample", "The 22-vertex (2,2) fixture");
  counter_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  auto* transform_cmd = app.add_subcommand("transform", "Vertex/edge weight model conversions");
  transform_cmd->require_subcommand(1);
  auto* vw2ew_cmd = transform_cmd->add_subcommand("vw2ew", "Vertex-weighted file to edge-weighted");
  vw2ew_cmd->add_option("FILE", file, "Vertex-weighted instance file")->required()->check(CLI::ExistingFile);
  vw2ew_cmd->add_option("-o,--output", out, "Output file (default stdout)");
  auto* ew2vw_cmd = transform_cmd->add_subcommand("ew2vw", "Edge-weighted file to vertex-weighted");
  ew2vw_cmd->add_option("FILE", file, "Instance file")->required()->check(CLI::ExistingFile);
  ew2vw_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz DOT export, optionally highlighting a solution");
  dot_cmd->add_option("FILE", file, "Instance file")->required()->check(CLI::ExistingFile);
  dot_cmd->add_option("SOLUTIONFILE", solution_file, "Solution file")->check(CLI::ExistingFile);
  dot_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(file, json);
    if (*oracle_cmd) return run_oracle(file, enumerate, max_paths, json);
    if (*verify_cmd) return run_verify(file, solution_file);
    if (*structure_cmd) return run_check_structure(file, solution_file);
    if (*random_cmd) {
      emit(serialize_instance(random_instance(spec)), out);
      return kExitOk;
    }
    if (*grid_cmd) return run_gen_gridtiling(k, n, clique_file, out, cert_out);
    if (*counter_cmd) {
      emit(serialize_instance(build_counterexample()), out);
      return kExitOk;
    }
    if (*vw2ew_cmd) {
      emit(serialize_instance(vertex_to_edge_weighted(parse_vertex_weighted(read_text_file(file))).instance), out);
      return kExitOk;
    }
    if (*ew2vw_cmd) {
      emit(serialize_vertex_weighted(edge_to_vertex_weighted(load_instance(file)).instance), out);
      return kExitOk;
    }
    if (*dot_cmd) {
      const Instance instance = load_instance(file);
      std::optional<Solution> solution;
      if (!solution_file.empty()) solution = parse_solution(instance.graph, read_text_file(solution_file));
      emit(to_dot(instance, solution), out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "scss: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "scss: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "scss: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "scss: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
