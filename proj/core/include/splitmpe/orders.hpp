// Copyright 2026 The splitmpe Authors
//
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

#ifndef SPLITMPE_ORDERS_HPP
#define SPLITMPE_ORDERS_HPP

#include <cstdint>
#include <vector>

#include "splitmpe/network.hpp"

namespace splitmpe {

using EliminationOrder = std::vector<int>;

/// Undirected graph over dense vertex ids with bitset adjacency rows.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(int n);

  int num_vertices() const { return n_; }
  void connect(int a, int b);
  bool connected(int a, int b) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  /// Number of fill-in edges needed to make v's neighborhood a clique.
  int fill_count(int v) const;

  /// Connects all neighbors of v pairwise, then detaches v.
  void eliminate(int v);

  /// True if the graph contains a cycle.
  bool has_cycle() const;

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> rows_;  // n_ * words_
};

/// Moral graph: undirected skeleton plus marriages between co-parents.
UndirectedGraph moral_graph(const Network& net);

/// Undirected skeleton of the DAG (no moralization).
UndirectedGraph skeleton(const Network& net);

/// Min-fill elimination order over the moral graph; ties broken by the
/// lowest variable id.
EliminationOrder min_fill_order(const Network& net);
EliminationOrder min_fill_order(UndirectedGraph g);

}  // namespace splitmpe

#endif  // SPLITMPE_ORDERS_HPP
