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

// Link-bias cost matrices and pairwise stability.
//
// Player i pays f_i(g) = sum_j c_ij x_ij, so c_ij < 0 means i gains from a
// link to j. Links form only under strict mutual benefit (link parsimony):
// a graph is pairwise stable iff every edge has c_ij < 0 and c_ji < 0, and
// no non-edge has both.

#ifndef NETFORM_STABILITY_H_
#define NETFORM_STABILITY_H_

#include <cstdint>
#include <string_view>
#include <type_traits>
#include <vector>

#include "netform/graph.h"

namespace netform {

// Dense n x n matrix with an unused zero diagonal. Rows need not be
// symmetric.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, T fill = T{})
      : n_(n), data_(static_cast<size_t>(n) * n, static_cast<Cell>(fill)) {
    for (int i = 0; i < n; ++i) At(i, i) = Cell{};
  }

  int n() const { return n_; }
  T operator()(Player i, Player j) const {
    return static_cast<T>(data_[Index(i, j)]);
  }
  // Writes to the diagonal are dropped.
  void Set(Player i, Player j, T value) {
    if (i != j) At(i, j) = value;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  size_t Index(Player i, Player j) const {
    return static_cast<size_t>(i) * n_ + j;
  }
  // std::vector<bool> hands out proxies, so booleans are stored as bytes.
  using Cell = std::conditional_t<std::is_same_v<T, bool>, uint8_t, T>;

  Cell& At(Player i, Player j) { return data_[Index(i, j)]; }

  int n_ = 0;
  std::vector<Cell> data_;
};

// c_ij is player i's cost for link ij. Entries must be finite; Set throws
// std::invalid_argument otherwise.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(int n, double fill = 0.0);

  int n() const { return c_.n(); }
  double operator()(Player i, Player j) const { return c_(i, j); }
  void Set(Player i, Player j, double value);

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  SquareMatrix<double> c_;
};

// psi_ij = 1 iff player i benefits from link ij.
using PsiMatrix = SquareMatrix<bool>;

enum class ViolationKind { kEdgeNotBeneficial, kMissingMutuallyBeneficialEdge };

std::string_view ToString(ViolationKind kind);

struct Violation {
  Edge pair;
  ViolationKind kind;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct StabilityReport {
  bool stable = true;
  std::vector<Violation> violations;  // Ascending by pair.
};

PsiMatrix psi_from_cost(const CostMatrix& c);

// Lists every failing pair rather than stopping at the first one.
// Throws std::invalid_argument on dimension mismatch.
StabilityReport check_pairwise_stable(const Graph& g, const CostMatrix& c);

// The unique pairwise stable graph of c: {i,j} is an edge iff c_ij < 0 and
// c_ji < 0.
Graph induced_stable_graph(const CostMatrix& c);

// Checks, for every pair i < j with x = x_ij:
//   psi_ij + psi_ji - 1 <= x,  x <= psi_ij,  x <= psi_ji.
// Symmetry of x holds by construction of Graph.
bool verify_lemma1(const PsiMatrix& psi, const Graph& g);

// Y_i = -f_i(g) = -sum_{j adjacent to i} c_ij.
double allocation(const Graph& g, const CostMatrix& c, Player i);

}  // namespace netform

#endif  // NETFORM_STABILITY_H_
