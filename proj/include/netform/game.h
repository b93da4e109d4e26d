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

// Myopic link-revision dynamics for linear link-bias games.

#ifndef NETFORM_GAME_H_
#define NETFORM_GAME_H_

#include <string_view>
#include <vector>

#include "netform/graph.h"
#include "netform/stability.h"

namespace netform {

enum class LinkAction { kAdd, kRemove };

std::string_view ToString(LinkAction action);

struct DynamicsStep {
  Edge pair;
  LinkAction action;
  // Change in f_u and f_v caused by the step.
  double delta_u = 0.0;
  double delta_v = 0.0;
};

struct DynamicsTrace {
  Graph initial;
  Graph final;
  std::vector<DynamicsStep> steps;
  int sweeps = 0;
  bool converged = false;
};

// f_i(g) = sum_{j adjacent to i} c_ij.
double player_cost(Player i, const Graph& g, const CostMatrix& c);

// Sweeps pairs in ascending (i, j) order. An edge is removed when either
// endpoint has c >= 0 (unilateral veto, c = 0 included); a non-edge is added
// when both endpoints have c < 0. Stops after a sweep with no change
// (converged) or after max_sweeps sweeps.
DynamicsTrace run_dynamics(const CostMatrix& c, const Graph& g0,
                           int max_sweeps);

// 2n, never below 2.
int DefaultMaxSweeps(int n);

// Applies steps to `initial`; throws std::invalid_argument if a step does
// not apply (adding a present edge or removing an absent one).
Graph ReplayTrace(const Graph& initial, const std::vector<DynamicsStep>& steps);

}  // namespace netform

#endif  // NETFORM_GAME_H_
