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

// Resource-constrained linking. Player i picks a whole set of partners S
// maximizing sum_{j in S} -c_ij subject to sum_{j in S} a_ij <= b_i, a 0/1
// knapsack over the partners willing to link with i.
//
// Weights and budgets are discretized to a fixed resolution before the
// dynamic program runs: weights round up and budgets round down, so a
// selection feasible in the discrete instance is feasible in the original
// one. Optimality is exact for the discrete instance.

#ifndef NETFORM_PORTFOLIO_H_
#define NETFORM_PORTFOLIO_H_

#include <cstdint>
#include <span>
#include <vector>

#include "netform/graph.h"
#include "netform/stability.h"

namespace netform {

// a_ij: resource player i spends on link ij. b_i: player i's budget.
class ResourceModel {
 public:
  ResourceModel() = default;
  // Throws std::invalid_argument on negative or non-finite entries or a
  // size mismatch between a and b.
  ResourceModel(SquareMatrix<double> a, std::vector<double> b);

  // A = 0 and every b_i = budget.
  static ResourceModel Void(int n, double budget);

  int n() const { return a_.n(); }
  double a(Player i, Player j) const { return a_(i, j); }
  double b(Player i) const { return b_[i]; }

 private:
  SquareMatrix<double> a_;
  std::vector<double> b_;
};

struct KnapsackOptions {
  double resolution = 1e-3;
  // Dynamic-program tables larger than this many cells are refused.
  int64_t max_table_cells = int64_t{1} << 27;
};

// Returns the chosen partners in ascending order. Offers with c_ij >= 0 are
// dropped up front. Among equal-value optima the lexicographically smallest
// sorted set wins. Throws std::invalid_argument if i or an offer is out of
// range or an offer equals i, and std::length_error when the discretized
// table would exceed options.max_table_cells.
std::vector<Player> knapsack_best_response(Player i, const CostMatrix& c,
                                           const ResourceModel& r,
                                           std::span<const Player> offers,
                                           const KnapsackOptions& options = {});

// sum_{j in chosen} -c_ij.
double portfolio_value(Player i, const CostMatrix& c,
                       std::span<const Player> chosen);

struct PortfolioOutcome {
  Graph graph;
  bool stable = false;
  int rounds = 0;
  std::vector<double> budget_slack;  // b_i - sum_{j adjacent} a_ij.
};

// Simultaneous best-response rounds.
//
// Round 0 selections are read off g0: S_j = {i adjacent to j : c_ji < 0}.
// In round t player j offers a link to i when c_ji < 0 and either i is in
// S_j from round t-1 or a_ji still fits in j's budget on top of S_j. Every
// player then takes knapsack_best_response over its offers, and ij is an
// edge iff each selected the other. The run is stable when a round leaves
// every selection unchanged; otherwise it stops after max_sweeps rounds
// with stable = false.
PortfolioOutcome run_portfolio_dynamics(const CostMatrix& c,
                                        const ResourceModel& r, const Graph& g0,
                                        int max_sweeps,
                                        const KnapsackOptions& options = {});

}  // namespace netform

#endif  // NETFORM_PORTFOLIO_H_
