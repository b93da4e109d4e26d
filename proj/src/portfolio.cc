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

#include "netform/portfolio.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace netform {
namespace {

constexpr double kRoundingSlack = 1e-9;

int64_t DiscreteWeight(double a, double resolution) {
  return std::max<int64_t>(
      0, static_cast<int64_t>(std::ceil(a / resolution - kRoundingSlack)));
}

int64_t DiscreteBudget(double b, double resolution) {
  return std::max<int64_t>(
      0, static_cast<int64_t>(std::floor(b / resolution + kRoundingSlack)));
}

bool AtLeast(double value, double target) {
  const double scale = std::max({1.0, std::abs(value), std::abs(target)});
  return value >= target - 1e-9 * scale;
}

void CheckPlayer(Player i, int n) {
  if (i < 0 || i >= n) throw std::invalid_argument("player out of range");
}

}  // namespace

ResourceModel::ResourceModel(SquareMatrix<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (static_cast<int>(b_.size()) != a_.n()) {
    throw std::invalid_argument("resource matrix and budgets differ in size");
  }
  for (Player i = 0; i < a_.n(); ++i) {
    if (!std::isfinite(b_[i]) || b_[i] < 0.0) {
      throw std::invalid_argument("budgets must be finite and >= 0");
    }
    for (Player j = 0; j < a_.n(); ++j) {
      if (!std::isfinite(a_(i, j)) || a_(i, j) < 0.0) {
        throw std::invalid_argument("resource costs must be finite and >= 0");
      }
    }
  }
}

ResourceModel ResourceModel::Void(int n, double budget) {
  return ResourceModel(SquareMatrix<double>(n, 0.0),
                       std::vector<double>(n, budget));
}

double portfolio_value(Player i, const CostMatrix& c,
                       std::span<const Player> chosen) {
  double value = 0.0;
  for (Player j : chosen) value -= c(i, j);
  return value;
}

std::vector<Player> knapsack_best_response(Player i, const CostMatrix& c,
                                           const ResourceModel& r,
                                           std::span<const Player> offers,
                                           const KnapsackOptions& options) {
  const int n = c.n();
  if (r.n() != n) {
    throw std::invalid_argument("cost and resource models differ in size");
  }
  CheckPlayer(i, n);
  if (!(options.resolution > 0.0)) {
    throw std::invalid_argument("resolution must be positive");
  }
  if (r.b(i) < 0.0) throw std::invalid_argument("negative budget");

  std::vector<Player> items;
  for (Player j : offers) {
    CheckPlayer(j, n);
    if (j == i) throw std::invalid_argument("player cannot offer to itself");
    if (c(i, j) < 0.0) items.push_back(j);
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());

  const int m = static_cast<int>(items.size());
  std::vector<int64_t> weight(m);
  std::vector<double> value(m);
  int64_t total_weight = 0;
  for (int t = 0; t < m; ++t) {
    weight[t] = DiscreteWeight(r.a(i, items[t]), options.resolution);
    value[t] = -c(i, items[t]);
    total_weight += weight[t];
  }
  const int64_t budget = DiscreteBudget(r.b(i), options.resolution);
  // Every value is positive, so when everything fits everything is taken.
  if (total_weight <= budget) return items;

  const int64_t cap = budget;
  const int64_t width = cap + 1;
  if ((m + 1) * width > options.max_table_cells) {
    throw std::length_error("knapsack table too large for this resolution");
  }
  // best[t * width + w]: optimum over items t..m-1 with capacity w.
  std::vector<double> best(static_cast<size_t>((m + 1) * width), 0.0);
  for (int t = m - 1; t >= 0; --t) {
    const double* next = &best[static_cast<size_t>((t + 1) * width)];
    double* row = &best[static_cast<size_t>(t * width)];
    for (int64_t w = 0; w <= cap; ++w) {
      row[w] = next[w];
      if (weight[t] <= w) row[w] = std::max(row[w], value[t] + next[w - weight[t]]);
    }
  }

  // Walk forward preferring to include: a set starting with the smaller
  // index sorts first, and skipping an item while value remains means a
  // later, larger index starts the rest of the list.
  std::vector<Player> chosen;
  int64_t w = cap;
  for (int t = 0; t < m; ++t) {
    const double target = best[static_cast<size_t>(t * width + w)];
    if (weight[t] <= w &&
        AtLeast(value[t] +
                    best[static_cast<size_t>((t + 1) * width + w - weight[t])],
                target)) {
      chosen.push_back(items[t]);
      w -= weight[t];
    }
  }
  return chosen;
}

PortfolioOutcome run_portfolio_dynamics(const CostMatrix& c,
                                        const ResourceModel& r, const Graph& g0,
                                        int max_sweeps,
                                        const KnapsackOptions& options) {
  const int n = c.n();
  if (r.n() != n || g0.n() != n) {
    throw std::invalid_argument("cost, resource and graph sizes differ");
  }
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");

  std::vector<std::vector<Player>> selected(n);
  for (Player j = 0; j < n; ++j) {
    for (Player i : g0.Neighbors(j)) {
      if (c(j, i) < 0.0) selected[j].push_back(i);
    }
  }

  PortfolioOutcome outcome;
  std::vector<std::vector<Player>> next(n);
  while (outcome.rounds < max_sweeps) {
    ++outcome.rounds;
    // Discrete resource already committed by each player's selection.
    std::vector<int64_t> used(n, 0);
    std::vector<std::vector<bool>> picks(n, std::vector<bool>(n, false));
    for (Player j = 0; j < n; ++j) {
      for (Player i : selected[j]) {
        used[j] += DiscreteWeight(r.a(j, i), options.resolution);
        picks[j][i] = true;
      }
    }
    for (Player i = 0; i < n; ++i) {
      std::vector<Player> offers;
      for (Player j = 0; j < n; ++j) {
        if (j == i || !(c(j, i) < 0.0)) continue;
        const bool affordable =
            used[j] + DiscreteWeight(r.a(j, i), options.resolution) <=
            DiscreteBudget(r.b(j), options.resolution);
        if (picks[j][i] || affordable) offers.push_back(j);
      }
      next[i] = knapsack_best_response(i, c, r, offers, options);
    }
    const bool unchanged = next == selected;
    selected.swap(next);
    if (unchanged) {
      outcome.stable = true;
      break;
    }
  }

  Graph g(n);
  std::vector<std::vector<bool>> picks(n, std::vector<bool>(n, false));
  for (Player i = 0; i < n; ++i) {
    for (Player j : selected[i]) picks[i][j] = true;
  }
  for (Player i = 0; i < n; ++i) {
    for (Player j = i + 1; j < n; ++j) {
      if (picks[i][j] && picks[j][i]) g.AddEdge(i, j);
    }
  }
  outcome.budget_slack.resize(n);
  for (Player i = 0; i < n; ++i) {
    double spent = 0.0;
    for (Player j : g.Neighbors(i)) spent += r.a(i, j);
    outcome.budget_slack[i] = r.b(i) - spent;
  }
  outcome.graph = std::move(g);
  return outcome;
}

}  // namespace netform
