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

#ifndef SPLITMPE_NETWORK_HPP
#define SPLITMPE_NETWORK_HPP

#include <string>
#include <vector>

#include "splitmpe/factor.hpp"

namespace splitmpe {

/// Linear-domain tolerance for CPT column normalization. Columns within
/// this tolerance of 1 are renormalized on load; anything further off is
/// rejected.
constexpr double kCptColumnTolerance = 1e-9;

struct Variable {
  int id;            // dense index, 0..n-1
  std::string name;  // presentation only
  int card;          // >= 1
};

/// A discrete Bayesian network: a DAG of variables with one CPT per
/// variable. CPT scopes list the parents in declared order with the child
/// last; tables are log-domain. Immutable after construction.
class Network {
 public:
  /// Empty network; real construction goes through the factories below.
  Network() = default;

  /// Builds and validates a network from linear-domain CPT tables
  /// (row-major, child fastest). Columns are renormalized if within
  /// tolerance, rejected otherwise. Checks acyclicity, scope/family
  /// agreement and table lengths.
  static Network from_linear_cpts(std::vector<Variable> vars,
                                  std::vector<std::vector<int>> parents,
                                  std::vector<std::vector<double>> tables);

  /// Builds from already-validated log-domain CPT factors. Structural
  /// checks (acyclicity, scope = family) still run; column sums are
  /// trusted. Used by the splitting transformations, which only rename
  /// scope variables of known-good tables.
  static Network from_log_cpts(std::vector<Variable> vars,
                               std::vector<std::vector<int>> parents,
                               std::vector<Factor> cpts);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const Variable& var(int i) const { return vars_[i]; }
  int card(int i) const { return vars_[i].card; }
  const std::string& name(int i) const { return vars_[i].name; }
  const std::vector<Variable>& variables() const { return vars_; }

  const std::vector<int>& parents(int i) const { return parents_[i]; }
  const std::vector<int>& children(int i) const { return children_[i]; }
  const Factor& cpt(int i) const { return cpts_[i]; }

  /// Parents in declared order, then the variable itself.
  std::vector<int> family(int i) const;

  /// A topological order of the DAG (exists by construction).
  const std::vector<int>& topo_order() const { return topo_; }

  /// Largest family size over all variables.
  int max_family_size() const;

  /// Log joint probability of a complete instantiation.
  double log_prob(const Instantiation& x) const;

 private:
  void finalize();  // children lists, topo order, structural checks

  std::vector<Variable> vars_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::vector<int>> children_;
  std::vector<Factor> cpts_;
  std::vector<int> topo_;
};

}  // namespace splitmpe

#endif  // SPLITMPE_NETWORK_HPP
