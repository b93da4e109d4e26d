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

#include "netform/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace netform {
namespace {

using nlohmann::ordered_json;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (;;) {
    const size_t end = s.find(sep, start);
    out.push_back(Trim(s.substr(start, end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool Skippable(std::string_view line) {
  line = Trim(line);
  return line.empty() || line.front() == '#';
}

int64_t ParseInt(std::string_view token, std::string_view what) {
  int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" +
                     std::string(token) + "'");
  }
  return value;
}

double ParseReal(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw ParseError("invalid real number: '" + std::string(token) + "'");
  }
  return value;
}

// Rows of a matrix CSV after the size line.
std::vector<std::vector<std::string_view>> ParseMatrixCells(
    std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : Lines(text)) {
    if (!Trim(line).empty()) lines.push_back(Trim(line));
  }
  if (lines.empty()) throw ParseError("matrix file is empty");
  const int64_t n = ParseInt(lines[0], "matrix size");
  if (n < 0) throw ParseError("matrix size must be >= 0");
  if (static_cast<int64_t>(lines.size()) != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<std::string_view>> rows;
  for (int64_t r = 1; r <= n; ++r) {
    auto cells = Split(lines[r], ',');
    if (static_cast<int64_t>(cells.size()) != n) {
      throw ParseError("matrix row " + std::to_string(r) + " has " +
                       std::to_string(cells.size()) + " entries, expected " +
                       std::to_string(n));
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

ordered_json PairToJson(Player i, Player j) {
  return ordered_json::array({i + 1, j + 1});
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Graph ParseEdgeList(std::string_view text, std::optional<int> n) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int64_t max_id = 0;
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (Skippable(line)) continue;
    const auto tokens = Tokens(line);
    if (tokens.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": expected two player ids");
    }
    const int64_t i = ParseInt(tokens[0], "player id");
    const int64_t j = ParseInt(tokens[1], "player id");
    if (i < 1 || j < 1 || (n && (i > *n || j > *n))) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": player id out of range");
    }
    if (i == j) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": self-loop");
    }
    const Edge e(static_cast<Player>(i - 1), static_cast<Player>(j - 1));
    if (!seen.insert(e).second) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                       ": duplicate edge");
    }
    edges.push_back(e);
    max_id = std::max({max_id, i, j});
  }
  return Graph(n.value_or(static_cast<int>(max_id)), edges);
}

std::string FormatEdgeList(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u + 1) + ' ' + std::to_string(e.v + 1) + '\n';
  }
  return out;
}

DegreeSequence ParseDegreesJson(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("degree JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("degree JSON must be an array");
  std::vector<int> k;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<int64_t>() < 0 ||
        v.get<int64_t>() > std::numeric_limits<int>::max()) {
      throw ParseError("degree JSON entries must be nonnegative integers");
    }
    k.push_back(v.get<int>());
  }
  return DegreeSequence(std::move(k));
}

DegreeSequence ParseDegreesText(std::string_view text) {
  std::vector<int> k;
  for (std::string_view line : Lines(text)) {
    if (Skippable(line)) continue;
    const int64_t v = ParseInt(Trim(line), "degree");
    if (v < 0 || v > std::numeric_limits<int>::max()) {
      throw ParseError("degrees must be nonnegative integers");
    }
    k.push_back(static_cast<int>(v));
  }
  return DegreeSequence(std::move(k));
}

DegreeSequence ReadDegrees(const std::filesystem::path& path) {
  const std::string text = ReadFile(path);
  if (path.extension() == ".json") return ParseDegreesJson(text);
  return ParseDegreesText(text);
}

std::string FormatDegreesJson(const DegreeSequence& k) {
  return ordered_json(k.values()).dump() + '\n';
}

std::string FormatDegreesText(const DegreeSequence& k) {
  std::string out;
  for (int v : k.values()) out += std::to_string(v) + '\n';
  return out;
}

void WriteDegrees(const std::filesystem::path& path, const DegreeSequence& k) {
  WriteFile(path, path.extension() == ".json" ? FormatDegreesJson(k)
                                              : FormatDegreesText(k));
}

std::string FormatReal(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("cannot format real");
  return std::string(buf, ptr);
}

CostMatrix ParseCostCsv(std::string_view text) {
  const auto rows = ParseMatrixCells(text);
  const int n = static_cast<int>(rows.size());
  CostMatrix c(n);
  for (Player i = 0; i < n; ++i) {
    for (Player j = 0; j < n; ++j) {
      const double v = ParseReal(rows[i][j]);
      if (i != j) c.Set(i, j, v);
    }
  }
  return c;
}

std::string FormatCostCsv(const CostMatrix& c) {
  std::string out = std::to_string(c.n()) + '\n';
  for (Player i = 0; i < c.n(); ++i) {
    for (Player j = 0; j < c.n(); ++j) {
      if (j > 0) out += ',';
      out += i == j ? "0" : FormatReal(c(i, j));
    }
    out += '\n';
  }
  return out;
}

PsiMatrix ParsePsiCsv(std::string_view text) {
  const auto rows = ParseMatrixCells(text);
  const int n = static_cast<int>(rows.size());
  PsiMatrix psi(n, false);
  for (Player i = 0; i < n; ++i) {
    for (Player j = 0; j < n; ++j) {
      const int64_t v = ParseInt(rows[i][j], "psi entry");
      if (v != 0 && v != 1) throw ParseError("psi entries must be 0 or 1");
      psi.Set(i, j, v == 1);
    }
  }
  return psi;
}

std::string FormatPsiCsv(const PsiMatrix& psi) {
  std::string out = std::to_string(psi.n()) + '\n';
  for (Player i = 0; i < psi.n(); ++i) {
    for (Player j = 0; j < psi.n(); ++j) {
      if (j > 0) out += ',';
      out += psi(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

ResourceModel ParseResourceModel(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("resource JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("A") || !j.contains("b") ||
      !j["A"].is_array() || !j["b"].is_array()) {
    throw ParseError("resource JSON needs arrays \"A\" and \"b\"");
  }
  const int n = static_cast<int>(j["b"].size());
  if (static_cast<int>(j["A"].size()) != n) {
    throw ParseError("resource JSON: A must have one row per budget");
  }
  SquareMatrix<double> a(n, 0.0);
  std::vector<double> b(n);
  try {
    for (Player i = 0; i < n; ++i) {
      const auto& row = j["A"][i];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw ParseError("resource JSON: A must be square");
      }
      for (Player k = 0; k < n; ++k) a.Set(i, k, row[k].get<double>());
      b[i] = j["b"][i].get<double>();
    }
    return ResourceModel(std::move(a), std::move(b));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("resource JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("resource JSON: ") + e.what());
  }
}

std::vector<std::pair<int, int>> DegreeHistogram(const DegreeSequence& d) {
  std::map<int, int> counts;
  for (int v : d.values()) ++counts[v];
  return {counts.begin(), counts.end()};
}

std::string FormatHistogramCsv(const DegreeSequence& d) {
  std::string out = "degree,count\n";
  for (const auto& [degree, count] : DegreeHistogram(d)) {
    out += std::to_string(degree) + ',' + std::to_string(count) + '\n';
  }
  return out;
}

std::string FormatDot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Player i = 0; i < g.n(); ++i) out += "  " + std::to_string(i + 1) + ";\n";
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.u + 1) + " -- " + std::to_string(e.v + 1) +
           ";\n";
  }
  out += "}\n";
  return out;
}

ordered_json EdgesToJson(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back(PairToJson(e.u, e.v));
  return edges;
}

ordered_json GraphToJson(const Graph& g) {
  ordered_json j;
  j["n"] = g.n();
  j["edges"] = EdgesToJson(g);
  j["degrees"] = degree_sequence(g).values();
  return j;
}

ordered_json ToJson(const SolveReport& report) {
  ordered_json j;
  j["n"] = report.graph.n();
  j["objective"] = report.objective;
  j["certificate"] = std::string(ToString(report.certificate));
  j["degrees_target"] = report.target.values();
  j["degrees_achieved"] = degree_sequence(report.graph).values();
  j["deviations"] = report.deviations.e;
  j["edges"] = EdgesToJson(report.graph);
  ordered_json ones = ordered_json::array();
  for (Player i = 0; i < report.psi.n(); ++i) {
    for (Player k = 0; k < report.psi.n(); ++k) {
      if (i != k && report.psi(i, k)) ones.push_back(PairToJson(i, k));
    }
  }
  j["psi_ones"] = std::move(ones);
  return j;
}

ordered_json ToJson(const StabilityReport& report, int n) {
  ordered_json j;
  j["n"] = n;
  j["stable"] = report.stable;
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json item;
    item["i"] = v.pair.u + 1;
    item["j"] = v.pair.v + 1;
    item["kind"] = std::string(ToString(v.kind));
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j;
}

ordered_json ToJson(const DynamicsTrace& trace) {
  ordered_json j;
  j["n"] = trace.initial.n();
  j["initial_edges"] = EdgesToJson(trace.initial);
  j["final_edges"] = EdgesToJson(trace.final);
  ordered_json steps = ordered_json::array();
  for (const DynamicsStep& s : trace.steps) {
    ordered_json item;
    item["i"] = s.pair.u + 1;
    item["j"] = s.pair.v + 1;
    item["action"] = std::string(ToString(s.action));
    item["delta_i"] = s.delta_u;
    item["delta_j"] = s.delta_v;
    steps.push_back(std::move(item));
  }
  j["steps"] = std::move(steps);
  j["converged"] = trace.converged;
  j["sweeps"] = trace.sweeps;
  return j;
}

ordered_json ToJson(const PortfolioOutcome& outcome) {
  ordered_json j;
  j["n"] = outcome.graph.n();
  j["stable"] = outcome.stable;
  j["rounds"] = outcome.rounds;
  j["degrees_achieved"] = degree_sequence(outcome.graph).values();
  j["edges"] = EdgesToJson(outcome.graph);
  j["budget_slack"] = outcome.budget_slack;
  return j;
}

std::string DumpJson(const ordered_json& j) { return j.dump(2) + '\n'; }

}  // namespace netform
