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

#include "splitmpe/orders.hpp"

#include <bit>

namespace splitmpe {

UndirectedGraph::UndirectedGraph(int n)
    : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * words_, 0) {}

void UndirectedGraph::connect(int a, int b) {
  if (a == b) return;
  rows_[static_cast<std::size_t>(a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  rows_[static_cast<std::size_t>(b) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
}

bool UndirectedGraph::connected(int a, int b) const {
  return (rows_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1;
}

std::vector<int> UndirectedGraph::neighbors(int v) const {
  std::vector<int> out;
  const std::uint64_t* row = &rows_[static_cast<std::size_t>(v) * words_];
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

int UndirectedGraph::degree(int v) const {
  int d = 0;
  const std::uint64_t* row = &rows_[static_cast<std::size_t>(v) * words_];
  for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
  return d;
}

int UndirectedGraph::fill_count(int v) const {
  // For each neighbor a: count neighbors of v not adjacent to a (excluding
  // a itself); each missing pair is counted twice.
  const std::uint64_t* row = &rows_[static_cast<std::size_t>(v) * words_];
  int missing = 0;
  for (int a : neighbors(v)) {
    const std::uint64_t* arow = &rows_[static_cast<std::size_t>(a) * words_];
    for (int w = 0; w < words_; ++w) missing += std::popcount(row[w] & ~arow[w]);
    --missing;  // a itself is in row but never in arow
  }
  return missing / 2;
}

void UndirectedGraph::eliminate(int v) {
  std::vector<int> nbrs = neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) connect(nbrs[i], nbrs[j]);
  for (int a : nbrs) {
    rows_[static_cast<std::size_t>(a) * words_ + v / 64] &=
        ~(std::uint64_t{1} << (v % 64));
    rows_[static_cast<std::size_t>(v) * words_ + a / 64] &=
        ~(std::uint64_t{1} << (a % 64));
  }
}

bool UndirectedGraph::has_cycle() const {
  // Union-find over all edges; a cycle appears as a redundant union.
  std::vector<int> parent(n_);
  for (int i = 0; i < n_; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < n_; ++a) {
    for (int b : neighbors(a)) {
      if (b <= a) continue;
      int ra = find(a), rb = find(b);
      if (ra == rb) return true;
      parent[ra] = rb;
    }
  }
  return false;
}

UndirectedGraph moral_graph(const Network& net) {
  UndirectedGraph g(net.num_vars());
  for (int i = 0; i < net.num_vars(); ++i) {
    std::vector<int> fam = net.family(i);
    for (std::size_t a = 0; a < fam.size(); ++a)
      for (std::size_t b = a + 1; b < fam.size(); ++b) g.connect(fam[a], fam[b]);
  }
  return g;
}

UndirectedGraph skeleton(const Network& net) {
  UndirectedGraph g(net.num_vars());
  for (int i = 0; i < net.num_vars(); ++i)
    for (int p : net.parents(i)) g.connect(p, i);
  return g;
}

EliminationOrder min_fill_order(const Network& net) {
  return min_fill_order(moral_graph(net));
}

EliminationOrder min_fill_order(UndirectedGraph g) {
  const int n = g.num_vertices();
  EliminationOrder order;
  order.reserve(n);
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_fill = 0;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      int fill = g.fill_count(v);
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    g.eliminate(best);
    done[best] = true;
    order.push_back(best);
  }
  return order;
}

}  // namespace splitmpe
