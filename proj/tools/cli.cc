// Copyright 2026 The netform Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "netform/game.h"
#include "netform/graph.h"
#include "netform/io.h"
#include "netform/portfolio.h"
#include "netform/powerlaw.h"
#include "netform/solver.h"
#include "netform/stability.h"

namespace netform::cli {
namespace {

namespace fs = std::filesystem;

// Reads CLI11 configuration from a JSON object. Nested objects name
// subcommands, e.g. {"seed": 1, "gen-degseq": {"n": 35}}.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool,
                        std::string) const override {
    return "{}";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
      throw CLI::ConversionError("config: top level must be a JSON object");
    }
    std::vector<CLI::ConfigItem> items;
    Flatten(j, {}, items);
    return items;
  }

 private:
  static std::string Scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void Flatten(const nlohmann::json& j,
                      const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto nested = parents;
        nested.push_back(key);
        Flatten(value, nested, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(Scalar(v));
      } else {
        item.inputs.push_back(Scalar(value));
      }
      items.push_back(std::move(item));
    }
  }
};

void Emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    WriteFile(path, contents);
  }
}

Graph LoadInitialGraph(const std::string& path, int n) {
  if (path.empty()) return Graph(n);
  return ParseEdgeList(ReadFile(path), n);
}

struct ConstructArgs {
  std::string degrees;
  std::string out_dir;
};

int Construct(const ConstructArgs& a, std::ostream& out) {
  const DegreeSequence k = ReadDegrees(a.degrees);
  const SolveReport report = solve_min_l1(k);
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  WriteFile(dir / "report.json", DumpJson(ToJson(report)));
  WriteFile(dir / "cost.csv", FormatCostCsv(cost_matrix_from_psi(report.psi)));
  WriteFile(dir / "psi.csv", FormatPsiCsv(report.psi));
  WriteFile(dir / "edges.txt", FormatEdgeList(report.graph));
  out << "objective " << report.objective << " ("
      << ToString(report.certificate) << "), " << report.graph.num_edges()
      << " edges\n";
  return report.objective == 0 ? kOk : kClosestOnly;
}

struct CheckArgs {
  std::string graph;
  std::string cost;
  std::string out;
};

int Check(const CheckArgs& a, std::ostream& out) {
  const CostMatrix c = ParseCostCsv(ReadFile(a.cost));
  const Graph g = ParseEdgeList(ReadFile(a.graph), c.n());
  const StabilityReport report = check_pairwise_stable(g, c);
  Emit(a.out, DumpJson(ToJson(report, c.n())), out);
  return report.stable ? kOk : kUnstable;
}

struct SimulateArgs {
  std::string cost;
  std::string initial;
  bool empty = false;
  int max_sweeps = 0;
  std::string out;
};

int Simulate(const SimulateArgs& a, std::ostream& out) {
  const CostMatrix c = ParseCostCsv(ReadFile(a.cost));
  const Graph g0 = LoadInitialGraph(a.empty ? "" : a.initial, c.n());
  const int sweeps = a.max_sweeps > 0 ? a.max_sweeps : DefaultMaxSweeps(c.n());
  const DynamicsTrace trace = run_dynamics(c, g0, sweeps);
  Emit(a.out, DumpJson(ToJson(trace)), out);
  return trace.converged ? kOk : kNotConverged;
}

struct PortfolioArgs {
  std::string cost;
  std::string resources;
  std::string initial;
  bool empty = false;
  int max_sweeps = 0;
  double resolution = 1e-3;
  std::string out;
};

int Portfolio(const PortfolioArgs& a, std::ostream& out) {
  const CostMatrix c = ParseCostCsv(ReadFile(a.cost));
  const ResourceModel r = ParseResourceModel(ReadFile(a.resources));
  if (r.n() != c.n()) {
    throw ParseError("resource model and cost matrix differ in size");
  }
  const Graph g0 = LoadInitialGraph(a.empty ? "" : a.initial, c.n());
  const int sweeps = a.max_sweeps > 0 ? a.max_sweeps : DefaultMaxSweeps(c.n());
  KnapsackOptions options;
  options.resolution = a.resolution;
  const PortfolioOutcome outcome =
      run_portfolio_dynamics(c, r, g0, sweeps, options);
  Emit(a.out, DumpJson(ToJson(outcome)), out);
  return outcome.stable ? kOk : kNotConverged;
}

struct GenArgs {
  PowerLawParams params;
  uint64_t seed = 0;
  std::string out;
  std::string histogram;
};

int GenDegSeq(const GenArgs& a, std::ostream& out) {
  const DegreeSequence k = sample_power_law_degrees(a.params, a.seed);
  if (a.out.empty()) {
    out << FormatDegreesText(k);
  } else {
    WriteDegrees(a.out, k);
  }
  if (!a.histogram.empty()) WriteFile(a.histogram, FormatHistogramCsv(k));
  return kOk;
}

struct ExportArgs {
  std::string graph;
  std::string format = "edgelist";
  int n = 0;
  std::string out;
};

int Export(const ExportArgs& a, std::ostream& out) {
  const std::optional<int> n =
      a.n > 0 ? std::optional<int>(a.n) : std::nullopt;
  const Graph g = ParseEdgeList(ReadFile(a.graph), n);
  std::string text;
  if (a.format == "dot") {
    text = FormatDot(g);
  } else if (a.format == "edgelist") {
    text = FormatEdgeList(g);
  } else if (a.format == "json") {
    text = DumpJson(GraphToJson(g));
  } else {
    text = FormatHistogramCsv(degree_sequence(g));
  }
  Emit(a.out, text, out);
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Build and simulate network formation games with "
               "link bias."};
  app.name("netform");
  app.require_subcommand(1);
  app.set_config("--config", "", "JSON file supplying option values")
      ->check(CLI::ExistingFile);
  app.config_formatter(std::make_shared<JsonConfig>());

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand(
      "construct",
      "Solve for the closest stable degree sequence and write the game");
  construct_cmd->add_option("-k,--degrees", construct.degrees,
                            "Target degrees (.json array or one per line)")
      ->required();
  construct_cmd
      ->add_option("-o,--out-dir", construct.out_dir,
                   "Directory for report.json, cost.csv, psi.csv, edges.txt")
      ->required();

  CheckArgs check;
  auto* check_cmd =
      app.add_subcommand("check", "Test a graph for pairwise stability");
  check_cmd->add_option("-g,--graph", check.graph, "Edge list")->required();
  check_cmd->add_option("-c,--cost", check.cost, "Cost matrix CSV")
      ->required();
  check_cmd->add_option("-o,--out", check.out, "Report path (default stdout)");

  SimulateArgs simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Run link-revision dynamics");
  simulate_cmd->add_option("-c,--cost", simulate.cost, "Cost matrix CSV")
      ->required();
  auto* sim_initial = simulate_cmd->add_option(
      "-g,--initial", simulate.initial, "Initial edge list");
  simulate_cmd->add_flag("--empty", simulate.empty, "Start from no links")
      ->excludes(sim_initial);
  simulate_cmd
      ->add_option("--max-sweeps", simulate.max_sweeps,
                   "Sweep limit (default 2n)")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("-o,--out", simulate.out,
                           "Trace path (default stdout)");

  PortfolioArgs portfolio;
  auto* portfolio_cmd = app.add_subcommand(
      "portfolio", "Run budget-constrained best-response dynamics");
  portfolio_cmd->add_option("-c,--cost", portfolio.cost, "Cost matrix CSV")
      ->required();
  portfolio_cmd
      ->add_option("-r,--resources", portfolio.resources,
                   "JSON with resource matrix A and budgets b")
      ->required();
  auto* pf_initial = portfolio_cmd->add_option(
      "-g,--initial", portfolio.initial, "Initial edge list");
  portfolio_cmd->add_flag("--empty", portfolio.empty, "Start from no links")
      ->excludes(pf_initial);
  portfolio_cmd
      ->add_option("--max-sweeps", portfolio.max_sweeps,
                   "Round limit (default 2n)")
      ->check(CLI::PositiveNumber);
  portfolio_cmd
      ->add_option("--resolution", portfolio.resolution,
                   "Discretization step for resource weights")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  portfolio_cmd->add_option("-o,--out", portfolio.out,
                            "Outcome path (default stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand(
      "gen-degseq", "Sample a power-law degree sequence");
  gen_cmd->add_option("-n,--n", gen.params.n, "Number of players")
      ->required();
  gen_cmd->add_option("--power-law,--gamma", gen.params.gamma, "Exponent")
      ->required();
  gen_cmd->add_option("--kmin", gen.params.kmin, "Smallest degree")
      ->required();
  gen_cmd->add_option("--kmax", gen.params.kmax, "Largest degree")
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("-o,--out", gen.out,
                      "Output path (.json or text; default stdout)");
  gen_cmd->add_option("--histogram", gen.histogram,
                      "Also write a degree,count CSV here");

  ExportArgs exp;
  auto* export_cmd =
      app.add_subcommand("export", "Convert an edge list for plotting");
  export_cmd->add_option("-g,--graph", exp.graph, "Edge list")->required();
  export_cmd->add_option("-f,--format", exp.format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"dot", "edgelist", "json", "histogram"}));
  export_cmd
      ->add_option("-n,--n", exp.n,
                   "Number of players (default: largest id in the file)")
      ->check(CLI::PositiveNumber);
  export_cmd->add_option("-o,--out", exp.out, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "netform: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (construct_cmd->parsed()) return Construct(construct, out);
    if (check_cmd->parsed()) return Check(check, out);
    if (simulate_cmd->parsed()) return Simulate(simulate, out);
    if (portfolio_cmd->parsed()) return Portfolio(portfolio, out);
    if (gen_cmd->parsed()) return GenDegSeq(gen, out);
    if (export_cmd->parsed()) return Export(exp, out);
  } catch (const std::exception& e) {
    err << "netform: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace netform::cli
