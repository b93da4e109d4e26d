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

// Text formats. All player ids in files are 1-based.
//
//   edge list     one "i j" per line, i < j, ascending; '#' lines ignored
//                 on input
//   degrees       .json: JSON array of integers; otherwise one integer per
//                 line
//   matrix CSV    first line n, then n rows of n comma-separated values,
//                 diagonal written as 0 (cost) or 0 (psi)
//   histogram     "degree,count" header, ascending degree, nonzero counts
//   resources     JSON {"A": n x n array, "b": length-n array}

#ifndef NETFORM_IO_H_
#define NETFORM_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "netform/game.h"
#include "netform/graph.h"
#include "netform/portfolio.h"
#include "netform/solver.h"
#include "netform/stability.h"

namespace netform {

// Malformed or inconsistent input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

// Without n, the graph has as many players as the largest id mentioned.
Graph ParseEdgeList(std::string_view text, std::optional<int> n = {});
std::string FormatEdgeList(const Graph& g);

DegreeSequence ParseDegreesJson(std::string_view text);
DegreeSequence ParseDegreesText(std::string_view text);
// Picks the JSON parser for a .json extension, the line parser otherwise.
DegreeSequence ReadDegrees(const std::filesystem::path& path);
std::string FormatDegreesJson(const DegreeSequence& k);
std::string FormatDegreesText(const DegreeSequence& k);
void WriteDegrees(const std::filesystem::path& path, const DegreeSequence& k);

// Shortest representation that parses back to the same double.
std::string FormatReal(double value);

CostMatrix ParseCostCsv(std::string_view text);
std::string FormatCostCsv(const CostMatrix& c);
PsiMatrix ParsePsiCsv(std::string_view text);
std::string FormatPsiCsv(const PsiMatrix& psi);

ResourceModel ParseResourceModel(std::string_view text);

// (degree, count) for every degree that occurs, ascending.
std::vector<std::pair<int, int>> DegreeHistogram(const DegreeSequence& d);
std::string FormatHistogramCsv(const DegreeSequence& d);

std::string FormatDot(const Graph& g);

nlohmann::ordered_json EdgesToJson(const Graph& g);
nlohmann::ordered_json GraphToJson(const Graph& g);
nlohmann::ordered_json ToJson(const SolveReport& report);
nlohmann::ordered_json ToJson(const StabilityReport& report, int n);
nlohmann::ordered_json ToJson(const DynamicsTrace& trace);
nlohmann::ordered_json ToJson(const PortfolioOutcome& outcome);

// Two-space indent plus trailing newline.
std::string DumpJson(const nlohmann::ordered_json& j);

}  // namespace netform

#endif  // NETFORM_IO_H_
