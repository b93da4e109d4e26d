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

// Construction of link-bias games whose pairwise stable graph has a degree
// sequence as close as possible (in l1) to a target k.
//
// The underlying 0-1 program is
//
//   min  sum_i e_i
//   s.t. |sum_{j != i} x_ij - k_i| <= e_i              for all i
//        psi_ij + psi_ji - 1 <= x_ij <= min(psi_ij, psi_ji)
//        x_ij = x_ji,  x, psi binary.
//
// For any symmetric x the choice psi = x satisfies the stability rows, so
// the program reduces exactly to finding a graphical degree sequence at
// minimum l1 distance from k and realizing it. solve_min_l1 does that in
// polynomial time through a maximum degree-bounded subgraph;
// brute_force_oracle enumerates graphs directly and exists to cross-check
// it.

#ifndef NETFORM_SOLVER_H_
#define NETFORM_SOLVER_H_

#include <cstdint>
#include <string_view>

#include "netform/graph.h"
#include "netform/stability.h"

namespace netform {

enum class Certificate {
  // The target itself is graphical and was realized; objective is 0.
  kGraphicalRealization,
  // Every smaller deviation budget is infeasible: the objective equals the
  // lower bound given by a maximum degree-bounded subgraph.
  kBudgetSearchExhaustion,
  // Exhaustive enumeration of all graphs on n vertices.
  kBruteForce,
};

std::string_view ToString(Certificate certificate);

struct SolveReport {
  Graph graph;
  PsiMatrix psi;  // psi_ij = x_ij.
  DegreeSequence target;
  DeviationVector deviations;
  int64_t objective = 0;
  Certificate certificate = Certificate::kGraphicalRealization;
};

// Deterministic and exact for every target; the empty graph is always
// feasible so there is no failure mode.
SolveReport solve_min_l1(const DegreeSequence& k);

inline constexpr int kMaxBruteForcePlayers = 8;

// Enumerates all 2^(n(n-1)/2) graphs. Ties go to the lexicographically
// smallest sorted edge list. Throws std::invalid_argument for n > 8.
SolveReport brute_force_oracle(const DegreeSequence& k);

// c_ij = -1 where psi_ij = 1, +1 elsewhere.
CostMatrix cost_matrix_from_psi(const PsiMatrix& psi);

// Closed interval of link-cost magnitudes, 0 < lo <= hi.
struct MagnitudeRange {
  double lo = 1.0;
  double hi = 1.0;
};

// c_ij = -m_ij if psi_ij = 1 else +m_ij, with m_ij uniform on the range.
// Entries are drawn row-major from an mt19937_64 seeded with `seed`.
// Throws std::invalid_argument for an empty or nonpositive range.
CostMatrix sample_cost_matrix(const PsiMatrix& psi, uint64_t seed,
                              MagnitudeRange range);

// Adjacency pattern of g as a psi matrix.
PsiMatrix psi_from_graph(const Graph& g);

}  // namespace netform

#endif  // NETFORM_SOLVER_H_
