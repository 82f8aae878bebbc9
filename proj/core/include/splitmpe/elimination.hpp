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

#ifndef SPLITMPE_ELIMINATION_HPP
#define SPLITMPE_ELIMINATION_HPP

#include <functional>
#include <string>
#include <utility>

#include "splitmpe/network.hpp"
#include "splitmpe/orders.hpp"

namespace splitmpe {

enum class ElimOp { Max, Sum };

/// One elimination step: the variable (partially) eliminated, which
/// factors were consumed — network CPTs by owning variable, earlier step
/// outputs by step index — and the scopes involved.
struct TraceStep {
  int var;
  std::vector<int> cpt_origins;    // owning variable ids of consumed CPTs
  std::vector<int> consumed;       // earlier step indices (edges j -> i)
  std::vector<int> product_scope;  // scope of the factor product, incl. var
  std::vector<int> result_scope;   // scope of the produced factor
};

/// Execution trace of a VE or MBE run. Reversing the consumed edges
/// yields a forest: every step output feeds at most one later step.
struct Trace {
  std::vector<TraceStep> steps;
  std::vector<std::vector<int>> families;  // family of each network variable

  /// Largest factor-product scope over all steps (the quantity an
  /// ibound caps).
  int max_product_width() const;
};

/// Selects the mini-bucket partition of a bucket: receives the variable
/// being eliminated and the bucket's factors as (creation id, scope)
/// pairs in creation order; returns groups of creation ids covering the
/// bucket. Factor ids count the network CPTs first (in variable order,
/// skipping CPTs fully fixed by evidence) and then produced factors in
/// step order.
using Partitioner = std::function<std::vector<std::vector<int>>(
    int var, const std::vector<std::pair<int, std::vector<int>>>& bucket,
    int ibound)>;

/// Creation-order greedy partition: seed each group with the first
/// unplaced factor, then add any later factor that keeps the union scope
/// within ibound variables, making the group maximal. A factor whose own
/// scope exceeds ibound forms a singleton group.
Partitioner greedy_partitioner();

struct VeResult {
  double log_value;
  Trace trace;
  Instantiation argmax;  // complete over non-evidence variables (Max only)
};

struct MbeResult {
  double log_bound;
  Trace trace;
};

/// Exact variable elimination on net's CPTs conditioned on e, along
/// `order` (which must cover every variable appearing after
/// conditioning; extra entries are skipped). With Max returns MPE_p and
/// one maximizer; with Sum returns Pr(e).
VeResult ve(const Network& net, const Instantiation& e,
            const EliminationOrder& order, ElimOp op);

/// Mini-bucket elimination: as ve, but each bucket is partitioned (by
/// `part`) and eliminated one group at a time, so a variable may take
/// several steps to disappear. Returns an upper bound on the ve value.
MbeResult mbe(const Network& net, const Instantiation& e,
              const EliminationOrder& order, int ibound, ElimOp op,
              const Partitioner& part = greedy_partitioner());

/// Steps reachable from step i by walking up consumed edges whose
/// produced factor mentions the variable eliminated at i. Includes i.
/// Sorted ascending.
std::vector<int> subtrace(const Trace& trace, int i);

/// Basis of step i: variables Y whose CPT appears in the subtrace of i
/// with the step's variable in Y's family. Sorted ascending.
std::vector<int> basis(const Trace& trace, int i);

/// DOT text of the trace: one node per step, edges labeled with the
/// scope of the consumed factor.
std::string trace_to_dot(const Trace& trace, const Network& net);

}  // namespace splitmpe

#endif  // SPLITMPE_ELIMINATION_HPP
