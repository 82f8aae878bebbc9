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

#ifndef SPLITMPE_JOINTREE_HPP
#define SPLITMPE_JOINTREE_HPP

#include "splitmpe/elimination.hpp"
#include "splitmpe/network.hpp"
#include "splitmpe/orders.hpp"

namespace splitmpe {

/// A cluster tree with family coverage and the running intersection
/// property. Clusters are sorted variable-id sets; each edge carries the
/// separator (intersection of its endpoints).
struct Jointree {
  struct Edge {
    int a, b;
    std::vector<int> separator;
  };

  std::vector<std::vector<int>> clusters;
  std::vector<Edge> edges;
  std::vector<int> family_cluster;  // per variable: a cluster covering its family

  int max_cluster_size() const;

  /// Sum over clusters and separators of the product of member
  /// cardinalities.
  double total_table_size(const Network& net) const;
};

/// Moralize, triangulate by eliminating along `order`, take maximal
/// cliques as clusters and connect them by a maximum-weight spanning
/// tree on separator sizes.
Jointree build_jointree(const Network& net, const EliminationOrder& order);

/// Reduction in total cluster and separator table size if `x` were
/// removed: sum of table_size(S) - table_size(S \ {x}) over every
/// cluster and separator S containing x. Throws if x appears nowhere.
double removal_score(const Jointree& jt, const Network& net, int x);

struct PropagationResult {
  double log_value;
  Instantiation argmax;  // complete over all network variables
};

/// Cluster-tree propagation engine. Cluster potentials (products of the
/// assigned CPTs over the full cluster scope) are materialized lazily on
/// first query and cached; each query allocates its own scratch, so
/// concurrent queries on one engine are safe after the first query.
class JointreeEngine {
 public:
  JointreeEngine(const Network& net, Jointree jt);

  const Jointree& jointree() const { return jt_; }

  /// Max-product propagation: MPE_p(net, e) and one maximizer (ties take
  /// the lowest value indices cluster by cluster).
  PropagationResult query_max(const Instantiation& e) const;

  /// Sum-product propagation: Pr(e).
  double query_sum(const Instantiation& e) const;

 private:
  void ensure_potentials() const;
  double propagate(const Instantiation& e, ElimOp op, Instantiation* argmax) const;

  Network net_;
  Jointree jt_;
  std::vector<int> parent_;      // tree parent per cluster (root: -1)
  std::vector<int> visit_order_; // children before parents
  mutable std::vector<Factor> potentials_;
  mutable bool materialized_ = false;
};

/// One-shot convenience wrappers building the engine internally.
PropagationResult max_propagate(const Jointree& jt, const Network& net,
                                const Instantiation& e);
double sum_propagate(const Jointree& jt, const Network& net,
                     const Instantiation& e);

}  // namespace splitmpe

#endif  // SPLITMPE_JOINTREE_HPP
