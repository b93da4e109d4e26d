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

#include "netform/game.h"

#include <algorithm>
#include <stdexcept>

namespace netform {

std::string_view ToString(LinkAction action) {
  return action == LinkAction::kAdd ? "Add" : "Remove";
}

double player_cost(Player i, const Graph& g, const CostMatrix& c) {
  return -allocation(g, c, i);
}

int DefaultMaxSweeps(int n) { return std::max(2, 2 * n); }

DynamicsTrace run_dynamics(const CostMatrix& c, const Graph& g0,
                           int max_sweeps) {
  if (c.n() != g0.n()) {
    throw std::invalid_argument("graph and cost matrix differ in size");
  }
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
  DynamicsTrace trace;
  trace.initial = g0;
  Graph g = g0;
  const int n = c.n();
  while (trace.sweeps < max_sweeps) {
    ++trace.sweeps;
    bool changed = false;
    for (Player i = 0; i < n; ++i) {
      for (Player j = i + 1; j < n; ++j) {
        const double cij = c(i, j);
        const double cji = c(j, i);
        if (g.HasEdge(i, j)) {
          if (cij >= 0.0 || cji >= 0.0) {
            g.RemoveEdge(i, j);
            trace.steps.push_back({Edge(i, j), LinkAction::kRemove, -cij, -cji});
            changed = true;
          }
        } else if (cij < 0.0 && cji < 0.0) {
          g.AddEdge(i, j);
          trace.steps.push_back({Edge(i, j), LinkAction::kAdd, cij, cji});
          changed = true;
        }
      }
    }
    if (!changed) {
      trace.converged = true;
      break;
    }
  }
  trace.final = std::move(g);
  return trace;
}

Graph ReplayTrace(const Graph& initial,
                  const std::vector<DynamicsStep>& steps) {
  Graph g = initial;
  for (const DynamicsStep& s : steps) {
    const bool ok = s.action == LinkAction::kAdd ? g.AddEdge(s.pair.u, s.pair.v)
                                                 : g.RemoveEdge(s.pair.u, s.pair.v);
    if (!ok) throw std::invalid_argument("trace step does not apply");
  }
  return g;
}

}  // namespace netform
