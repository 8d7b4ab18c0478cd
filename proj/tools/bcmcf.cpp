// Command-line front end.
//
//   bcmcf solve     --algorithm exact|gk|gk-acyclic|oracle [--epsilon E] INPUT
//   bcmcf frontier  INPUT
//   bcmcf oracle    INPUT
//   bcmcf validate  INPUT FLOW
//   bcmcf gen       --nodes N --edges M [--seed S] [--acyclic] ...
//
// Exit codes: 0 success, 1 infeasible flow (validate), 2 usage or parse
// error, 3 enumeration guard exceeded, 4 internal solver error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bcmcf/bcmcf.hpp"

namespace {

enum ExitCode { kOk = 0, kInfeasible = 1, kUsage = 2, kGuard = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string flow_file;
  std::string output;
  std::string algorithm = "exact";
  std::string oracle = "cycle";
  std::optional<double> epsilon;
  std::optional<std::int64_t> max_iterations;
  std::string format = "text";
  std::string frontier_method = "solver";
  double guard = bcmcf::kDefaultEnumerationGuard;
  bcmcf::GeneratorConfig gen;
  std::string budget_mode = "tight";
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + cfg.output + "'");
  out << text;
}

bcmcf::Instance LoadInstance(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("missing instance file");
  return bcmcf::ParseInstance(ReadFile(cfg.input));
}

int CmdSolve(const RunConfig& cfg) {
  const auto algorithm = bcmcf::AlgorithmFromName(cfg.algorithm);
  if (!algorithm) throw UsageError("unknown algorithm '" + cfg.algorithm + "'");
  bcmcf::Algorithm chosen = *algorithm;
  if (chosen == bcmcf::Algorithm::kGk && cfg.oracle == "dag-path") {
    chosen = bcmcf::Algorithm::kGkAcyclic;
  } else if (cfg.oracle != "cycle" && cfg.oracle != "dag-path") {
    throw UsageError("unknown oracle '" + cfg.oracle + "'");
  }
  const bool fptas = chosen == bcmcf::Algorithm::kGk || chosen == bcmcf::Algorithm::kGkAcyclic;
  if (fptas && !cfg.epsilon) throw UsageError("--epsilon is required for " + cfg.algorithm);
  if (!fptas && cfg.epsilon) throw UsageError("--epsilon only applies to gk and gk-acyclic");

  const bcmcf::Instance original = LoadInstance(cfg);
  const bcmcf::PreprocessResult pre = bcmcf::Preprocess(original);
  bcmcf::GkOptions gk;
  gk.max_iterations = cfg.max_iterations;
  bcmcf::Solution sol;
  switch (chosen) {
    case bcmcf::Algorithm::kExact: sol = bcmcf::SolveExact(pre.instance); break;
    case bcmcf::Algorithm::kGk: sol = bcmcf::SolveGk(pre.instance, *cfg.epsilon, gk); break;
    case bcmcf::Algorithm::kGkAcyclic:
      sol = bcmcf::SolveGkAcyclic(pre.instance, *cfg.epsilon, gk);
      break;
    case bcmcf::Algorithm::kOracle: sol = bcmcf::OracleOptimum(pre.instance, cfg.guard); break;
  }
  sol.flow = bcmcf::LiftFlow(original, pre, sol.flow);
  sol.objective = sol.flow.cost;
  const bcmcf::SolutionDocument doc = bcmcf::ToDocument(original, sol);
  Emit(cfg, cfg.format == "structured" ? bcmcf::WriteSolutionJson(doc)
                                       : bcmcf::WriteSolutionText(doc));
  return kOk;
}

int CmdOracle(RunConfig cfg) {
  cfg.algorithm = "oracle";
  cfg.epsilon.reset();
  return CmdSolve(cfg);
}

int CmdFrontier(const RunConfig& cfg) {
  const bcmcf::Instance original = LoadInstance(cfg);
  const bcmcf::Instance inst = bcmcf::Preprocess(original).instance;
  if (const double size = bcmcf::EnumerationSpace(inst); size > cfg.guard) {
    throw bcmcf::GuardExceeded(size, cfg.guard);
  }
  std::vector<bcmcf::FrontierPoint> points;
  if (cfg.frontier_method == "oracle") {
    points = bcmcf::OracleFrontier(inst, cfg.guard);
  } else if (cfg.frontier_method == "solver") {
    points = bcmcf::EnumerateFrontier(inst);
  } else {
    throw UsageError("unknown frontier method '" + cfg.frontier_method + "'");
  }
  Emit(cfg, bcmcf::WriteFrontier(points, original.budget));
  return kOk;
}

int CmdValidate(const RunConfig& cfg) {
  const bcmcf::Instance inst = LoadInstance(cfg);
  if (cfg.flow_file.empty()) throw UsageError("missing flow file");
  const std::vector<bcmcf::Rational> x = bcmcf::ReadFlowValues(ReadFile(cfg.flow_file));
  if (x.size() != inst.edges.size()) {
    throw UsageError("arity mismatch: flow has " + std::to_string(x.size()) +
                     " values, instance has " + std::to_string(inst.edges.size()) + " edges");
  }
  const bcmcf::ValidationReport report = bcmcf::ValidateFlow(inst, x);
  std::ostringstream out;
  out << (report.feasible() ? "feasible" : "infeasible") << " c=" << bcmcf::ToString(report.cost)
      << " b=" << bcmcf::ToString(report.fee) << '\n';
  for (const auto& v : report.capacity_violations) {
    out << "capacity_violation edge " << v.edge + 1 << " value " << bcmcf::ToString(v.value)
        << " capacity " << inst.edges[v.edge].capacity << '\n';
  }
  for (const auto& v : report.conservation_violations) {
    out << "conservation_violation node " << v.node + 1 << " residual "
        << bcmcf::ToString(v.residual) << '\n';
  }
  if (report.negative_value) {
    out << "negative_flow_value " << bcmcf::ToString(*report.negative_value) << '\n';
  }
  if (report.budget_excess) {
    out << "budget_violation " << bcmcf::ToString(*report.budget_excess) << " (budget "
        << inst.budget << ")\n";
  }
  Emit(cfg, out.str());
  return report.feasible() ? kOk : kInfeasible;
}

int CmdGen(RunConfig cfg) {
  const auto mode = bcmcf::BudgetModeFromName(cfg.budget_mode);
  if (!mode) throw UsageError("unknown budget mode '" + cfg.budget_mode + "'");
  cfg.gen.budget_mode = *mode;
  std::ostringstream out;
  out << "c generated: seed " << cfg.gen.seed << ", budget mode " << cfg.budget_mode
      << (cfg.gen.acyclic ? ", acyclic" : "") << '\n';
  out << bcmcf::SerializeInstance(bcmcf::GenerateInstance(cfg.gen));
  Emit(cfg, out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budget-constrained minimum cost flow solver"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input,--input", cfg.input, "Instance file");
    cmd->add_option("-o,--output", cfg.output, "Write the result here instead of stdout");
  };
  auto add_guard = [&](CLI::App* cmd) {
    cmd->add_option("--guard", cfg.guard, "Limit on prod_e (u_e + 1) for enumeration")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "Solve an instance");
  add_input(solve);
  add_guard(solve);
  solve->add_option("--algorithm", cfg.algorithm, "exact | gk | gk-acyclic | oracle")
      ->check(CLI::IsMember({"exact", "gk", "gk-acyclic", "oracle"}));
  solve->add_option("--epsilon", cfg.epsilon, "Approximation parameter in (0, 1)")
      ->check(CLI::Range(0.0, 1.0));
  solve->add_option("--oracle", cfg.oracle, "Packing oracle for gk: cycle | dag-path")
      ->check(CLI::IsMember({"cycle", "dag-path"}));
  solve->add_option("--max-iterations", cfg.max_iterations, "Packing iteration cap override");
  solve->add_option("--format", cfg.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI::App* frontier = app.add_subcommand("frontier", "Print Pareto frontier plot data");
  add_input(frontier);
  add_guard(frontier);
  frontier->add_option("--method", cfg.frontier_method, "solver | oracle")
      ->check(CLI::IsMember({"solver", "oracle"}));

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force optimum of a small instance");
  add_input(oracle);
  add_guard(oracle);
  oracle->add_option("--format", cfg.format, "text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI::App* validate = app.add_subcommand("validate", "Check a flow against an instance");
  add_input(validate);
  validate->add_option("flow", cfg.flow_file, "Flow file (solution document or value list)")
      ->required();

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("-o,--output", cfg.output, "Write the instance here instead of stdout");
  gen->add_option("--nodes", cfg.gen.nodes, "Number of nodes (>= 2)")->required();
  gen->add_option("--edges", cfg.gen.edges, "Number of edges (>= 1)")->required();
  gen->add_option("--u-max", cfg.gen.max_capacity, "Capacities uniform in [0, u-max]");
  gen->add_option("--c-max", cfg.gen.max_cost, "Costs uniform in [-c-max, c-max]");
  gen->add_option("--b-max", cfg.gen.max_fee, "Fees uniform in [0, b-max]");
  gen->add_option("--budget-mode", cfg.budget_mode, "tight | slack | zero")
      ->check(CLI::IsMember({"tight", "slack", "zero"}));
  gen->add_option("--seed", cfg.gen.seed, "Generator seed");
  gen->add_flag("--acyclic", cfg.gen.acyclic, "Edges go from lower to higher node ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve) return CmdSolve(cfg);
    if (*frontier) return CmdFrontier(cfg);
    if (*oracle) return CmdOracle(cfg);
    if (*validate) return CmdValidate(cfg);
    if (*gen) return CmdGen(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const bcmcf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const bcmcf::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGuard;
  } catch (const bcmcf::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
