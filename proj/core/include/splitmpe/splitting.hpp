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

#ifndef SPLITMPE_SPLITTING_HPP
#define SPLITMPE_SPLITTING_HPP

#include <string>
#include <vector>

#include "splitmpe/elimination.hpp"
#include "splitmpe/network.hpp"

namespace splitmpe {

struct CloneInfo {
  int id;                     // clone variable id in the split network
  int original;               // variable the clone was created for
  std::vector<int> children;  // children inherited from the original
};

/// A network together with the node-splitting bookkeeping that relates it
/// to the network it approximates. Splitting a variable X detaches some
/// of its child edges and hands them to a fresh root clone with a
/// uniform prior; beta_log accumulates log |C| per clone. Immutable;
/// split operations return new values.
class SplitNetwork {
 public:
  /// No splits performed: net == base, beta = 1.
  static SplitNetwork identity(Network base);

  const Network& base() const { return base_; }
  const Network& net() const { return net_; }
  const std::vector<CloneInfo>& clones() const { return clones_; }
  double beta_log() const { return beta_log_; }

  int clone_count() const { return static_cast<int>(clones_.size()); }

  /// Distinct variables that have at least one clone, ascending.
  std::vector<int> split_variables() const;

  /// Split variables chased down to base-network ids: a split clone is
  /// represented by its base ancestor. Ascending, distinct.
  std::vector<int> split_base_variables() const;

  /// Clones per base variable (counting clones of its clones).
  int clones_of_base(int base_var) const;

  friend SplitNetwork split_node_named(const SplitNetwork&, int,
                                       const std::vector<int>&,
                                       const std::string&);

 private:
  SplitNetwork() = default;
  Network base_;
  Network net_;
  std::vector<CloneInfo> clones_;
  double beta_log_ = 0.0;
};

/// Splits `x` according to the (nonempty) child set `children`: the edges
/// x -> children are removed and a fresh root clone with a uniform prior
/// takes them over. `x` may itself be a clone. The clone is named
/// "<x>^i" for the i-th split of x.
SplitNetwork split_node(const SplitNetwork& sn, int x,
                        const std::vector<int>& children);

/// Splits `x` along every outgoing edge: one clone per edge, each
/// inheriting exactly one child (named "<x>^<child>"). x must have
/// children.
SplitNetwork full_split(const SplitNetwork& sn, int x);

/// Extends an instantiation over original variables to their clones:
/// every clone whose original is assigned (directly or through a chain
/// of clones) receives the same value.
Instantiation extend_instantiation(const SplitNetwork& sn,
                                   const Instantiation& x);

enum class ExactEngine { Jointree, VariableElimination };

/// Upper bound on MPE_p(base, e): beta_log plus the exact MPE of the
/// split network under (e, e-extended-to-clones).
double mpe_bound(const SplitNetwork& sn, const Instantiation& e,
                 ExactEngine engine = ExactEngine::Jointree);

/// Upper bound on Pr(e): the sum-product analogue of mpe_bound.
double pe_bound(const SplitNetwork& sn, const Instantiation& e,
                ExactEngine engine = ExactEngine::Jointree);

struct SplitMbeResult {
  SplitNetwork sn;
  EliminationOrder order_prime;  // covers every variable the MBE run eliminated
};

/// Replays an MBE run as node splitting: a step whose basis does not
/// contain its own variable splits that variable according to the basis,
/// and the fresh clone takes the step's slot in the returned order.
/// Exact elimination on the result along order_prime reproduces the MBE
/// bound (after the beta correction) at the same width.
SplitMbeResult split_mbe(const Network& net, const Instantiation& e,
                         const EliminationOrder& order, int ibound,
                         const Partitioner& part = greedy_partitioner());

/// JSON mapping file: per clone its id, name, original and inherited
/// children, plus beta_log.
std::string mapping_to_json(const SplitNetwork& sn);

}  // namespace splitmpe

#endif  // SPLITMPE_SPLITTING_HPP
