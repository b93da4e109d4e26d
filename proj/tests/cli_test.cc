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
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "netform/io.h"
#include "nlohmann/json.hpp"
#include "test_util.h"

namespace netform {
namespace {

namespace fs = std::filesystem;
using ::netform::testing::FixtureDir;
using ::netform::testing::Slurp;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("netform_cli_" + std::string(info->name()) + "_" +
            std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Fixture(const std::string& name) const {
    return (FixtureDir() / name).string();
  }
  void Put(const std::string& name, const std::string& text) const {
    WriteFile(dir_ / name, text);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, ConstructRealizesFixtureDegrees) {
  ASSERT_EQ(Run({"construct", "-k", Fixture("k.json"), "-o", Path("out")}),
            cli::kOk)
      << err_.str();
  const auto report = nlohmann::json::parse(Slurp(Path("out/report.json")));
  EXPECT_EQ(report["objective"], 0);
  EXPECT_EQ(report["degrees_achieved"], report["degrees_target"]);
  const Graph g = ParseEdgeList(Slurp(Path("out/edges.txt")), 35);
  EXPECT_EQ(FormatHistogramCsv(degree_sequence(g)),
            "degree,count\n1,29\n2,4\n3,1\n4,1\n");
  EXPECT_EQ(ParsePsiCsv(Slurp(Path("out/psi.csv"))), psi_from_graph(g));
}

TEST_F(CliTest, ConstructThenCheckRoundTrip) {
  ASSERT_EQ(Run({"construct", "-k", Fixture("k.txt"), "-o", Path("out")}),
            cli::kOk);
  EXPECT_EQ(Run({"check", "-g", Path("out/edges.txt"), "-c",
                 Path("out/cost.csv")}),
            cli::kOk);
  EXPECT_TRUE(nlohmann::json::parse(out_.str())["stable"].get<bool>());
}

TEST_F(CliTest, ConstructExitCodes) {
  Put("zeros.json", "[0, 0, 0, 0]");
  EXPECT_EQ(Run({"construct", "-k", Path("zeros.json"), "-o", Path("z")}),
            cli::kOk);
  EXPECT_EQ(Slurp(Path("z/edges.txt")), "");
  Put("odd.json", "[1, 1, 1]");
  EXPECT_EQ(Run({"construct", "-k", Path("odd.json"), "-o", Path("o")}),
            cli::kClosestOnly);
  const auto report = nlohmann::json::parse(Slurp(Path("o/report.json")));
  EXPECT_EQ(report["objective"], 1);
  EXPECT_EQ(report["deviations"], nlohmann::json({0, 0, 1}));
}

TEST_F(CliTest, CheckFlagsMissingEdge) {
  EXPECT_EQ(Run({"check", "-g", Fixture("edges.txt"), "-c", Fixture("cost.csv")}),
            cli::kOk);
  std::string edges = Slurp(Fixture("edges.txt"));
  edges = edges.substr(edges.find('\n') + 1);
  Put("minus.txt", edges);
  EXPECT_EQ(Run({"check", "-g", Path("minus.txt"), "-c", Fixture("cost.csv")}),
            cli::kUnstable);
  const auto report = nlohmann::json::parse(out_.str());
  ASSERT_EQ(report["violations"].size(), 1u);
  EXPECT_EQ(report["violations"][0]["kind"], "MissingMutuallyBeneficialEdge");
}

TEST_F(CliTest, CheckEmptyGraphWithPositiveCosts) {
  Put("empty.txt", "");
  Put("cost.csv", FormatCostCsv(CostMatrix(4, 1.0)));
  EXPECT_EQ(Run({"check", "-g", Path("empty.txt"), "-c", Path("cost.csv"), "-o",
                 Path("r.json")}),
            cli::kOk);
  EXPECT_TRUE(nlohmann::json::parse(Slurp(Path("r.json")))["stable"].get<bool>());
}

TEST_F(CliTest, SimulateFromFixedPointTakesNoSteps) {
  EXPECT_EQ(Run({"simulate", "-c", Fixture("cost.csv"), "-g",
                 Fixture("edges.txt")}),
            cli::kOk);
  const auto trace = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(trace["steps"].empty());
  EXPECT_TRUE(trace["converged"].get<bool>());
  EXPECT_EQ(trace["final_edges"], trace["initial_edges"]);
}

TEST_F(CliTest, SimulateReportsNonConvergence) {
  EXPECT_EQ(Run({"simulate", "-c", Fixture("cost.csv"), "--empty"}), cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["final_edges"].size(), 22u);
  EXPECT_EQ(Run({"simulate", "-c", Fixture("cost.csv"), "--empty",
                 "--max-sweeps", "1"}),
            cli::kNotConverged);
  EXPECT_EQ(Run({"simulate", "-c", Fixture("cost.csv"), "--empty", "-g",
                 Fixture("edges.txt")}),
            cli::kInputError);
}

TEST_F(CliTest, PortfolioWithVoidConstraint) {
  const int n = 35;
  nlohmann::json model;
  model["A"] = std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0));
  model["b"] = std::vector<double>(n, 1.0);
  Put("r.json", model.dump());
  EXPECT_EQ(Run({"portfolio", "-c", Fixture("cost.csv"), "-r", Path("r.json"),
                 "--empty"}),
            cli::kOk)
      << err_.str();
  const auto out = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(out["stable"].get<bool>());
  EXPECT_EQ(out["edges"].size(), 22u);
}

TEST_F(CliTest, PortfolioTightBudgets) {
  Put("cost.csv", FormatCostCsv(CostMatrix(3, -1.0)));
  Put("r.json", R"({"A": [[0,1,1],[1,0,1],[1,1,0]], "b": [1,1,1]})");
  EXPECT_EQ(Run({"portfolio", "-c", Path("cost.csv"), "-r", Path("r.json"),
                 "--empty"}),
            cli::kOk);
  const auto out = nlohmann::json::parse(out_.str());
  EXPECT_LE(out["edges"].size(), 1u);
  for (const auto& slack : out["budget_slack"]) EXPECT_GE(slack.get<double>(), 0.0);
}

TEST_F(CliTest, GenDegseqIsDeterministic) {
  const std::vector<std::string> args = {"gen-degseq", "-n", "300", "--gamma",
                                         "2.5", "--kmin", "1", "--kmax", "20",
                                         "--seed", "11"};
  ASSERT_EQ(Run(args), cli::kOk);
  const std::string first = out_.str();
  ASSERT_EQ(Run(args), cli::kOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(ParseDegreesText(first).n(), 300);

  auto with_files = args;
  with_files.insert(with_files.end(),
                    {"-o", Path("k.json"), "--histogram", Path("h.csv")});
  ASSERT_EQ(Run(with_files), cli::kOk);
  const DegreeSequence k = ParseDegreesJson(Slurp(Path("k.json")));
  EXPECT_EQ(k, ParseDegreesText(first));
  EXPECT_EQ(Slurp(Path("h.csv")), FormatHistogramCsv(k));
}

TEST_F(CliTest, ExportFormats) {
  Put("tri.txt", "1 2\n2 3\n3 1\n");
  ASSERT_EQ(Run({"export", "-g", Path("tri.txt"), "-f", "dot"}), cli::kOk);
  int links = 0;
  for (size_t p = out_.str().find("--"); p != std::string::npos;
       p = out_.str().find("--", p + 2)) {
    ++links;
  }
  EXPECT_EQ(links, 3);
  ASSERT_EQ(Run({"export", "-g", Path("tri.txt"), "-f", "edgelist"}), cli::kOk);
  EXPECT_EQ(out_.str(), "1 2\n1 3\n2 3\n");
  ASSERT_EQ(Run({"export", "-g", Path("tri.txt"), "-f", "json", "-n", "4"}),
            cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["degrees"],
            nlohmann::json({2, 2, 2, 0}));
  ASSERT_EQ(Run({"export", "-g", Path("tri.txt"), "-f", "histogram", "-n", "4"}),
            cli::kOk);
  EXPECT_EQ(out_.str(), "degree,count\n0,1\n2,3\n");
  EXPECT_EQ(Run({"export", "-g", Path("tri.txt"), "-f", "png"}),
            cli::kInputError);
}

TEST_F(CliTest, JsonConfigWithFlagPrecedence) {
  Put("cfg.json", R"({"gen-degseq": {"n": 50, "gamma": 2.0, "kmin": 1,
                      "kmax": 8, "seed": 5}})");
  ASSERT_EQ(Run({"--config", Path("cfg.json"), "gen-degseq"}), cli::kOk)
      << err_.str();
  const std::string from_config = out_.str();
  ASSERT_EQ(Run({"gen-degseq", "-n", "50", "--gamma", "2.0", "--kmin", "1",
                 "--kmax", "8", "--seed", "5"}),
            cli::kOk);
  EXPECT_EQ(out_.str(), from_config);
  ASSERT_EQ(Run({"--config", Path("cfg.json"), "gen-degseq", "-n", "7"}),
            cli::kOk);
  EXPECT_EQ(ParseDegreesText(out_.str()).n(), 7);

  Put("bad.json", "{ not json");
  EXPECT_EQ(Run({"--config", Path("bad.json"), "gen-degseq"}),
            cli::kInputError);
}

TEST_F(CliTest, MalformedInputsExitTwo) {
  Put("bad.txt", "1 1\n");
  Put("bad.csv", "2\n0,1\n");
  EXPECT_EQ(Run({"check", "-g", Path("bad.txt"), "-c", Fixture("cost.csv")}),
            cli::kInputError);
  EXPECT_EQ(Run({"check", "-g", Fixture("edges.txt"), "-c", Path("bad.csv")}),
            cli::kInputError);
  EXPECT_EQ(Run({"check", "-g", Fixture("edges.txt")}), cli::kInputError);
  EXPECT_EQ(Run({"frobnicate"}), cli::kInputError);
  EXPECT_EQ(Run({"gen-degseq", "-n", "5", "--gamma", "-1", "--kmin", "1",
                 "--kmax", "3", "--seed", "1"}),
            cli::kInputError);
  EXPECT_FALSE(err_.str().empty());
  EXPECT_EQ(Run({"--help"}), cli::kOk);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  ASSERT_EQ(Run({"construct", "-k", Fixture("k.json"), "-o", Path("a")}), cli::kOk);
  ASSERT_EQ(Run({"construct", "-k", Fixture("k.json"), "-o", Path("b")}), cli::kOk);
  for (const char* f : {"report.json", "cost.csv", "psi.csv", "edges.txt"}) {
    EXPECT_EQ(Slurp(Path(std::string("a/") + f)),
              Slurp(Path(std::string("b/") + f)))
        << f;
  }
  ASSERT_EQ(Run({"simulate", "-c", Fixture("cost.csv"), "--empty"}), cli::kOk);
  const std::string first = out_.str();
  ASSERT_EQ(Run({"simulate", "-c", Fixture("cost.csv"), "--empty"}), cli::kOk);
  EXPECT_EQ(out_.str(), first);
}

}  // namespace
}  // namespace netform
