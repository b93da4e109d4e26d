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

#include "netform/graph.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netform {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("graph size must be nonnegative");
  adjacency_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) AddEdge(e.u, e.v);
}

Graph Graph::Complete(int n) {
  Graph g(n);
  for (Player i = 0; i < n; ++i) {
    for (Player j = i + 1; j < n; ++j) g.AddEdge(i, j);
  }
  return g;
}

void Graph::CheckPair(Player i, Player j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw std::invalid_argument("player out of range: " + std::to_string(i) +
                                "," + std::to_string(j));
  }
  if (i == j) {
    throw std::invalid_argument("self-loop on player " + std::to_string(i));
  }
}

void Graph::SetBit(Player i, Player j, bool value) {
  uint64_t& word = adjacency_[static_cast<size_t>(i) * words_ + j / 64];
  const uint64_t mask = uint64_t{1} << (j % 64);
  word = value ? (word | mask) : (word & ~mask);
}

bool Graph::HasEdge(Player i, Player j) const {
  if (i == j) return false;
  CheckPair(i, j);
  const uint64_t word = adjacency_[static_cast<size_t>(i) * words_ + j / 64];
  return (word >> (j % 64)) & 1;
}

int Graph::Degree(Player i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("player out of range");
  int d = 0;
  const size_t row = static_cast<size_t>(i) * words_;
  for (int w = 0; w < words_; ++w) d += std::popcount(adjacency_[row + w]);
  return d;
}

std::vector<Player> Graph::Neighbors(Player i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("player out of range");
  std::vector<Player> out;
  const size_t row = static_cast<size_t>(i) * words_;
  for (int w = 0; w < words_; ++w) {
    uint64_t word = adjacency_[row + w];
    while (word != 0) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

bool Graph::AddEdge(Player i, Player j) {
  CheckPair(i, j);
  if (!edges_.insert(Edge(i, j)).second) return false;
  SetBit(i, j, true);
  SetBit(j, i, true);
  return true;
}

bool Graph::RemoveEdge(Player i, Player j) {
  CheckPair(i, j);
  if (edges_.erase(Edge(i, j)) == 0) return false;
  SetBit(i, j, false);
  SetBit(j, i, false);
  return true;
}

DegreeSequence::DegreeSequence(std::vector<int> k) : k_(std::move(k)) {
  for (int v : k_) {
    if (v < 0) throw std::invalid_argument("degree entries must be >= 0");
  }
}

int64_t DegreeSequence::Sum() const {
  return std::accumulate(k_.begin(), k_.end(), int64_t{0});
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d(g.n());
  for (Player i = 0; i < g.n(); ++i) d[i] = g.Degree(i);
  return DegreeSequence(std::move(d));
}

int64_t l1_gap(const DegreeSequence& d, const DegreeSequence& k) {
  return deviations(d, k).total;
}

DeviationVector deviations(const DegreeSequence& d, const DegreeSequence& k) {
  if (d.n() != k.n()) {
    throw std::invalid_argument("degree sequences differ in length");
  }
  DeviationVector out;
  out.e.resize(d.n());
  for (Player i = 0; i < d.n(); ++i) {
    out.e[i] = std::abs(d[i] - k[i]);
    out.total += out.e[i];
  }
  return out;
}

bool is_graphical(const DegreeSequence& k) {
  const int n = k.n();
  if (k.Sum() % 2 != 0) return false;
  std::vector<int64_t> d(k.values().begin(), k.values().end());
  for (int64_t v : d) {
    if (v > n - 1) return false;
  }
  std::sort(d.begin(), d.end(), std::greater<>());

  // suffix[i] = d[i] + ... + d[n-1].
  std::vector<int64_t> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d[i];

  // For r = 1..n: sum_{i<r} d_i <= r(r-1) + sum_{i>=r} min(d_i, r).
  // `small` is the first index holding a value < r; it only moves left.
  int small = n;
  int64_t prefix = 0;
  for (int r = 1; r <= n; ++r) {
    prefix += d[r - 1];
    while (small > 0 && d[small - 1] < r) --small;
    const int first = std::max(small, r);
    const int64_t capped = static_cast<int64_t>(first - r) * r;
    const int64_t rhs =
        static_cast<int64_t>(r) * (r - 1) + capped + suffix[first];
    if (prefix > rhs) return false;
  }
  return true;
}

Graph max_bounded_subgraph(const DegreeSequence& caps) {
  const int n = caps.n();
  Graph g(n);
  std::vector<int> residual(n);
  for (Player i = 0; i < n; ++i) residual[i] = std::min(caps[i], n - 1);
  std::vector<Player> order(n);
  auto by_residual = [&residual](Player a, Player b) {
    if (residual[a] != residual[b]) return residual[a] > residual[b];
    return a < b;
  };
  // Retired vertices have residual 0 and sort behind every live one, so a
  // hub never meets an existing neighbour among its picks.
  while (n > 0) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), by_residual);
    const Player hub = order[0];
    if (residual[hub] == 0) break;
    for (int t = 1; t <= residual[hub] && t < n; ++t) {
      const Player other = order[t];
      if (residual[other] == 0) break;
      g.AddEdge(hub, other);
      --residual[other];
    }
    residual[hub] = 0;
  }
  return g;
}

std::optional<Graph> realize(const DegreeSequence& k) {
  if (!is_graphical(k)) return std::nullopt;
  // On a graphical sequence the greedy saturates every cap.
  return max_bounded_subgraph(k);
}

}  // namespace netform
