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

// Shared helpers for the unit and acceptance suites. Nothing here calls
// into the code paths it is used to check.

#ifndef NETFORM_TESTS_TEST_UTIL_H_
#define NETFORM_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "netform/graph.h"
#include "netform/stability.h"

namespace netform::testing {

inline std::filesystem::path FixtureDir() {
  return std::filesystem::path(NETFORM_FIXTURE_DIR) / "paper-example";
}

inline std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Ordered (i, j) pairs, 0-based, listed in psi_pairs.txt.
inline std::set<std::pair<int, int>> ExampleOrderedPairs() {
  std::set<std::pair<int, int>> out;
  std::ifstream in(FixtureDir() / "psi_pairs.txt");
  int i = 0, j = 0;
  while (in >> i >> j) out.emplace(i - 1, j - 1);
  return out;
}

inline constexpr int kExampleN = 35;

inline std::vector<int> ExampleDegrees() {
  std::vector<int> k(29, 1);
  k.insert(k.end(), {2, 2, 2, 2, 3, 4});
  return k;
}

// Built straight from the listed pairs, not from the fixture CSV reader.
inline Graph ExampleGraph() {
  Graph g(kExampleN);
  for (auto [i, j] : ExampleOrderedPairs()) {
    if (i < j) g.AddEdge(i, j);
  }
  return g;
}

inline CostMatrix ExampleCost() {
  CostMatrix c(kExampleN, 1.0);
  for (auto [i, j] : ExampleOrderedPairs()) c.Set(i, j, -1.0);
  return c;
}

inline Graph RandomGraph(int n, double p, std::mt19937_64& gen) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(gen)) g.AddEdge(i, j);
    }
  }
  return g;
}

// Each entry independently negative with probability p_negative; magnitudes
// in [0.5, 2), plus exact zeros with probability p_zero.
inline CostMatrix RandomCost(int n, double p_negative, std::mt19937_64& gen,
                             double p_zero = 0.0) {
  std::bernoulli_distribution neg(p_negative);
  std::bernoulli_distribution zero(p_zero);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  CostMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double v = mag(gen);
      if (zero(gen)) v = 0.0;
      c.Set(i, j, neg(gen) ? -v : v);
    }
  }
  return c;
}

// Every degree sequence realized by some graph on n <= 7 vertices, found by
// enumerating all edge subsets.
inline std::set<std::vector<int>> EnumerateRealizable(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::vector<int>> out;
  const uint64_t count = uint64_t{1} << pairs.size();
  for (uint64_t mask = 0; mask < count; ++mask) {
    std::vector<int> d(n, 0);
    for (size_t e = 0; e < pairs.size(); ++e) {
      if ((mask >> e) & 1) {
        ++d[pairs[e].first];
        ++d[pairs[e].second];
      }
    }
    out.insert(std::move(d));
  }
  return out;
}

// Calls f on every vector in {0..max_value}^n.
template <typename F>
void ForEachVector(int n, int max_value, F&& f) {
  std::vector<int> v(n, 0);
  for (;;) {
    f(v);
    int pos = 0;
    while (pos < n && v[pos] == max_value) v[pos++] = 0;
    if (pos == n) return;
    ++v[pos];
  }
}

}  // namespace netform::testing

#endif  // NETFORM_TESTS_TEST_UTIL_H_
