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

#include "netform/stability.h"

#include <cmath>
#include <stdexcept>

namespace netform {

CostMatrix::CostMatrix(int n, double fill) : c_(n, fill) {
  if (!std::isfinite(fill)) throw std::invalid_argument("non-finite cost");
}

void CostMatrix::Set(Player i, Player j, double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite cost");
  if (i < 0 || i >= n() || j < 0 || j >= n()) {
    throw std::invalid_argument("player out of range");
  }
  c_.Set(i, j, value);
}

std::string_view ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEdgeNotBeneficial:
      return "EdgeNotBeneficial";
    case ViolationKind::kMissingMutuallyBeneficialEdge:
      return "MissingMutuallyBeneficialEdge";
  }
  return "Unknown";
}

PsiMatrix psi_from_cost(const CostMatrix& c) {
  PsiMatrix psi(c.n(), false);
  for (Player i = 0; i < c.n(); ++i) {
    for (Player j = 0; j < c.n(); ++j) {
      if (i != j) psi.Set(i, j, c(i, j) < 0.0);
    }
  }
  return psi;
}

StabilityReport check_pairwise_stable(const Graph& g, const CostMatrix& c) {
  if (g.n() != c.n()) {
    throw std::invalid_argument("graph and cost matrix differ in size");
  }
  StabilityReport report;
  for (Player i = 0; i < g.n(); ++i) {
    for (Player j = i + 1; j < g.n(); ++j) {
      const bool mutual = c(i, j) < 0.0 && c(j, i) < 0.0;
      const bool linked = g.HasEdge(i, j);
      if (linked && !mutual) {
        report.violations.push_back(
            {Edge(i, j), ViolationKind::kEdgeNotBeneficial});
      } else if (!linked && mutual) {
        report.violations.push_back(
            {Edge(i, j), ViolationKind::kMissingMutuallyBeneficialEdge});
      }
    }
  }
  report.stable = report.violations.empty();
  return report;
}

Graph induced_stable_graph(const CostMatrix& c) {
  Graph g(c.n());
  for (Player i = 0; i < c.n(); ++i) {
    for (Player j = i + 1; j < c.n(); ++j) {
      if (c(i, j) < 0.0 && c(j, i) < 0.0) g.AddEdge(i, j);
    }
  }
  return g;
}

bool verify_lemma1(const PsiMatrix& psi, const Graph& g) {
  if (psi.n() != g.n()) {
    throw std::invalid_argument("psi and graph differ in size");
  }
  for (Player i = 0; i < g.n(); ++i) {
    for (Player j = i + 1; j < g.n(); ++j) {
      const int x = g.HasEdge(i, j) ? 1 : 0;
      const int a = psi(i, j) ? 1 : 0;
      const int b = psi(j, i) ? 1 : 0;
      if (a + b - 1 > x || x > a || x > b) return false;
    }
  }
  return true;
}

double allocation(const Graph& g, const CostMatrix& c, Player i) {
  if (g.n() != c.n()) {
    throw std::invalid_argument("graph and cost matrix differ in size");
  }
  if (i < 0 || i >= g.n()) throw std::invalid_argument("player out of range");
  double cost = 0.0;
  for (Player j : g.Neighbors(i)) cost += c(i, j);
  return -cost;
}

}  // namespace netform
