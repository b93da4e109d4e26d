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

// Simple undirected graphs on players 0..n-1 and degree sequences.
//
// Players are 0-based everywhere in the C++ API. The file formats in io.h
// convert to and from 1-based player ids.

#ifndef NETFORM_GRAPH_H_
#define NETFORM_GRAPH_H_

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace netform {

using Player = int;

// Unordered pair {u, v}, always stored with u < v.
struct Edge {
  Player u = 0;
  Player v = 0;

  Edge() = default;
  Edge(Player a, Player b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Symmetric simple graph. Keeps an ordered edge set together with one
// adjacency bitset row per player; degree and containment queries go
// through the bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws std::invalid_argument on self-loops or out-of-range players.
  // Duplicate pairs are merged.
  Graph(int n, std::span<const Edge> edges);

  static Graph Complete(int n);

  int n() const { return n_; }
  int64_t num_edges() const { return static_cast<int64_t>(edges_.size()); }
  const std::set<Edge>& edges() const { return edges_; }

  bool HasEdge(Player i, Player j) const;
  int Degree(Player i) const;
  std::vector<Player> Neighbors(Player i) const;

  // Return true if the graph changed.
  bool AddEdge(Player i, Player j);
  bool RemoveEdge(Player i, Player j);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void CheckPair(Player i, Player j) const;
  void SetBit(Player i, Player j, bool value);

  int n_ = 0;
  int words_ = 0;
  std::set<Edge> edges_;
  std::vector<uint64_t> adjacency_;  // n_ rows of words_ words.
};

// Target or realized degrees. Entries are nonnegative; a target may exceed
// n-1, in which case no graph attains it.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  // Throws std::invalid_argument on negative entries.
  explicit DegreeSequence(std::vector<int> k);

  int n() const { return static_cast<int>(k_.size()); }
  int operator[](Player i) const { return k_[i]; }
  const std::vector<int>& values() const { return k_; }
  int64_t Sum() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) =
      default;

 private:
  std::vector<int> k_;
};

// e_i = |deg_i - k_i| for some graph and target.
struct DeviationVector {
  std::vector<int> e;
  int64_t total = 0;
};

DegreeSequence degree_sequence(const Graph& g);

// Sum of |d_i - k_i|. Throws std::invalid_argument on length mismatch.
int64_t l1_gap(const DegreeSequence& d, const DegreeSequence& k);

DeviationVector deviations(const DegreeSequence& d, const DegreeSequence& k);

// Erdos-Gallai test.
bool is_graphical(const DegreeSequence& k);

// A simple graph with deg_i <= caps_i for every i and as many edges as
// possible. Greedy: the vertex with the largest remaining cap (lowest index
// on ties) is joined to the min(cap, #others with positive cap) others of
// largest remaining cap, then retired. An exchange argument shows some
// maximum subgraph starts with exactly that star, so the greedy is optimal.
// Caps above n-1 behave like n-1.
Graph max_bounded_subgraph(const DegreeSequence& caps);

// Havel-Hakimi realization. At every step the vertex with the largest
// residual degree (lowest index on ties) is joined to the next largest
// residual degrees in the same order, so the output is deterministic.
// Returns std::nullopt when k is not graphical.
std::optional<Graph> realize(const DegreeSequence& k);

}  // namespace netform

#endif  // NETFORM_GRAPH_H_
