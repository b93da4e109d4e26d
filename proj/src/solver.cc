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

#include "netform/solver.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netform/random.h"

namespace netform {
namespace {

SolveReport MakeReport(Graph g, const DegreeSequence& k,
                       Certificate certificate) {
  SolveReport report;
  report.psi = psi_from_graph(g);
  report.target = k;
  report.deviations = deviations(degree_sequence(g), k);
  report.objective = report.deviations.total;
  report.certificate = certificate;
  report.graph = std::move(g);
  return report;
}

}  // namespace

std::string_view ToString(Certificate certificate) {
  switch (certificate) {
    case Certificate::kGraphicalRealization:
      return "GraphicalRealization";
    case Certificate::kBudgetSearchExhaustion:
      return "BudgetSearchExhaustion";
    case Certificate::kBruteForce:
      return "BruteForce";
  }
  return "Unknown";
}

PsiMatrix psi_from_graph(const Graph& g) {
  PsiMatrix psi(g.n(), false);
  for (const Edge& e : g.edges()) {
    psi.Set(e.u, e.v, true);
    psi.Set(e.v, e.u, true);
  }
  return psi;
}

// Deleting an edge at a vertex above its target lowers that vertex's
// deviation by one and raises the other endpoint's by at most one, so some
// optimal graph stays within the clamped target everywhere. For such a
// graph the objective is forced + sum(clamped) - 2|E|, which is minimized by
// a maximum subgraph with deg_i <= clamped_i. No budget below that value is
// attainable, which is what the exhaustion certificate records.
SolveReport solve_min_l1(const DegreeSequence& k) {
  const int n = k.n();
  std::vector<int> clamped(n);
  int64_t forced = 0;
  for (Player i = 0; i < n; ++i) {
    clamped[i] = std::min(k[i], std::max(n - 1, 0));
    forced += k[i] - clamped[i];
  }
  const DegreeSequence caps(clamped);
  if (forced == 0 && is_graphical(caps)) {
    return MakeReport(*realize(caps), k, Certificate::kGraphicalRealization);
  }
  const DegreeSequence best = degree_sequence(max_bounded_subgraph(caps));
  return MakeReport(*realize(best), k, Certificate::kBudgetSearchExhaustion);
}

SolveReport brute_force_oracle(const DegreeSequence& k) {
  const int n = k.n();
  if (n > kMaxBruteForcePlayers) {
    throw std::invalid_argument("brute force oracle supports n <= 8");
  }
  std::vector<Edge> pairs;
  for (Player i = 0; i < n; ++i) {
    for (Player j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int m = static_cast<int>(pairs.size());

  // Sorted edge lists compare lexicographically. At the lowest edge index
  // where two masks differ, the mask holding that edge is smaller unless
  // the other mask has nothing beyond it (then the other is a prefix).
  auto lex_less = [](uint64_t a, uint64_t b) {
    const uint64_t diff = a ^ b;
    if (diff == 0) return false;
    const int e = std::countr_zero(diff);
    const bool a_has = (a >> e) & 1;
    const uint64_t other = a_has ? b : a;
    const bool other_is_prefix = (other >> e) == 0;
    return a_has != other_is_prefix;
  };

  std::vector<int> degree(n, 0);
  int64_t objective = k.Sum();
  uint64_t mask = 0;
  uint64_t best_mask = 0;
  int64_t best = objective;
  const uint64_t count = uint64_t{1} << m;
  // Gray-code walk: one edge toggles per step.
  for (uint64_t t = 1; t < count; ++t) {
    const int e = std::countr_zero(t);
    const bool adding = ((mask >> e) & 1) == 0;
    mask ^= uint64_t{1} << e;
    for (Player v : {pairs[e].u, pairs[e].v}) {
      objective -= std::abs(degree[v] - k[v]);
      degree[v] += adding ? 1 : -1;
      objective += std::abs(degree[v] - k[v]);
    }
    if (objective < best || (objective == best && lex_less(mask, best_mask))) {
      best = objective;
      best_mask = mask;
    }
  }

  Graph g(n);
  for (int e = 0; e < m; ++e) {
    if ((best_mask >> e) & 1) g.AddEdge(pairs[e].u, pairs[e].v);
  }
  return MakeReport(std::move(g), k, Certificate::kBruteForce);
}

CostMatrix cost_matrix_from_psi(const PsiMatrix& psi) {
  CostMatrix c(psi.n(), 1.0);
  for (Player i = 0; i < psi.n(); ++i) {
    for (Player j = 0; j < psi.n(); ++j) {
      if (i != j && psi(i, j)) c.Set(i, j, -1.0);
    }
  }
  return c;
}

CostMatrix sample_cost_matrix(const PsiMatrix& psi, uint64_t seed,
                              MagnitudeRange range) {
  if (!(range.lo > 0.0) || !(range.hi >= range.lo) ||
      !std::isfinite(range.hi)) {
    throw std::invalid_argument(
        "magnitude range must satisfy 0 < lo <= hi < inf");
  }
  std::mt19937_64 gen(seed);
  CostMatrix c(psi.n());
  for (Player i = 0; i < psi.n(); ++i) {
    for (Player j = 0; j < psi.n(); ++j) {
      if (i == j) continue;
      const double m = UniformIn(gen, range.lo, range.hi);
      c.Set(i, j, psi(i, j) ? -m : m);
    }
  }
  return c;
}

}  // namespace netform
