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

#include "splitmpe/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "splitmpe/error.hpp"

namespace splitmpe {

namespace {

void check_vars(const std::vector<Variable>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].id != static_cast<int>(i))
      throw ModelError("variable ids must be dense 0..n-1; found id " +
                       std::to_string(vars[i].id) + " at position " +
                       std::to_string(i));
    if (vars[i].card < 1)
      throw ModelError("variable " + std::to_string(i) + " (" + vars[i].name +
                       ") has cardinality " + std::to_string(vars[i].card));
  }
}

}  // namespace

Network Network::from_linear_cpts(std::vector<Variable> vars,
                                  std::vector<std::vector<int>> parents,
                                  std::vector<std::vector<double>> tables) {
  check_vars(vars);
  const int n = static_cast<int>(vars.size());
  if (static_cast<int>(parents.size()) != n || static_cast<int>(tables.size()) != n)
    throw ModelError("parents/tables count does not match variable count");

  std::vector<Factor> cpts;
  cpts.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> scope = parents[i];
    scope.push_back(i);
    std::vector<int> cards;
    cards.reserve(scope.size());
    std::size_t expect = 1;
    for (int v : scope) {
      if (v < 0 || v >= n)
        throw ModelError("variable " + std::to_string(i) +
                         " has out-of-range parent " + std::to_string(v));
      cards.push_back(vars[v].card);
      expect *= static_cast<std::size_t>(vars[v].card);
    }
    if (tables[i].size() != expect)
      throw ModelError("CPT table for variable " + std::to_string(i) + " (" +
                       vars[i].name + ") has " + std::to_string(tables[i].size()) +
                       " entries, expected " + std::to_string(expect));

    // The child is the last (fastest) scope variable, so each column over
    // the child is a contiguous run. Renormalize within tolerance only.
    const int cc = vars[i].card;
    std::vector<double> log_table(tables[i].size());
    for (std::size_t col = 0; col < tables[i].size(); col += cc) {
      double sum = 0.0;
      for (int v = 0; v < cc; ++v) {
        double p = tables[i][col + v];
        if (p < 0.0 || !std::isfinite(p))
          throw ModelError("CPT for variable " + std::to_string(i) + " (" +
                           vars[i].name + ") has invalid entry " + std::to_string(p));
        sum += p;
      }
      if (std::abs(sum - 1.0) > kCptColumnTolerance)
        throw ModelError("CPT column for variable " + std::to_string(i) + " (" +
                         vars[i].name + ") sums to " + std::to_string(sum) +
                         ", expected 1");
      for (int v = 0; v < cc; ++v) {
        double p = tables[i][col + v] / sum;
        log_table[col + v] = p == 0.0 ? kLogZero : std::log(p);
      }
    }
    cpts.emplace_back(std::move(scope), std::move(cards), std::move(log_table));
  }

  Network net;
  net.vars_ = std::move(vars);
  net.parents_ = std::move(parents);
  net.cpts_ = std::move(cpts);
  net.finalize();
  return net;
}

Network Network::from_log_cpts(std::vector<Variable> vars,
                               std::vector<std::vector<int>> parents,
                               std::vector<Factor> cpts) {
  check_vars(vars);
  const int n = static_cast<int>(vars.size());
  if (static_cast<int>(parents.size()) != n || static_cast<int>(cpts.size()) != n)
    throw ModelError("parents/cpts count does not match variable count");
  Network net;
  net.vars_ = std::move(vars);
  net.parents_ = std::move(parents);
  net.cpts_ = std::move(cpts);
  net.finalize();
  return net;
}

void Network::finalize() {
  const int n = num_vars();
  children_.assign(n, {});
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int p : parents_[i]) {
      if (p < 0 || p >= n)
        throw ModelError("variable " + std::to_string(i) +
                         " has out-of-range parent " + std::to_string(p));
      if (p == i)
        throw ModelError("variable " + std::to_string(i) + " is its own parent");
      children_[p].push_back(i);
      ++indegree[i];
    }
    // CPT scope must equal the family: parents in order, child last.
    std::vector<int> fam = parents_[i];
    fam.push_back(i);
    if (cpts_[i].scope() != fam)
      throw ModelError("CPT scope for variable " + std::to_string(i) +
                       " does not match its family");
    for (std::size_t k = 0; k < fam.size(); ++k)
      if (cpts_[i].cards()[k] != vars_[fam[k]].card)
        throw ModelError("CPT cardinalities for variable " + std::to_string(i) +
                         " do not match the family");
  }

  // Kahn topological sort; failure means a directed cycle.
  topo_.clear();
  std::deque<int> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    topo_.push_back(v);
    for (int c : children_[v])
      if (--indegree[c] == 0) ready.push_back(c);
  }
  if (static_cast<int>(topo_.size()) != n) {
    for (int i = 0; i < n; ++i)
      if (indegree[i] > 0)
        throw ModelError("parent structure is cyclic (variable " +
                         std::to_string(i) + " lies on a cycle)");
  }
}

std::vector<int> Network::family(int i) const {
  std::vector<int> fam = parents_[i];
  fam.push_back(i);
  return fam;
}

int Network::max_family_size() const {
  int best = 0;
  for (int i = 0; i < num_vars(); ++i)
    best = std::max(best, static_cast<int>(parents_[i].size()) + 1);
  return best;
}

double Network::log_prob(const Instantiation& x) const {
  double acc = 0.0;
  for (int i = 0; i < num_vars(); ++i) acc += cpts_[i].at(x);
  return acc;
}

}  // namespace splitmpe
