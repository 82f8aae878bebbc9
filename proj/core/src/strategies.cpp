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

#include "splitmpe/strategies.hpp"

#include "splitmpe/error.hpp"
#include "splitmpe/jointree.hpp"

namespace splitmpe {

StrategyResult mb_strategy(const Network& net, const Instantiation& e,
                           const StrategyConfig& cfg) {
  if (cfg.kind != StrategyKind::MiniBucket)
    throw Error("mb_strategy called with a non-MB config");
  if (cfg.limit < 1) throw Error("strategy limit must be >= 1");
  EliminationOrder order = cfg.order ? *cfg.order : min_fill_order(net);
  SplitMbeResult r = split_mbe(net, e, order, cfg.limit);
  return StrategyResult{std::move(r.sn), std::move(r.order_prime)};
}

SplitNetwork jt_strategy(const Network& net, const StrategyConfig& cfg) {
  if (cfg.kind != StrategyKind::Jointree)
    throw Error("jt_strategy called with a non-JT config");
  if (cfg.limit < 1) throw Error("strategy limit must be >= 1");
  if (cfg.limit < net.max_family_size())
    throw Error("jointree cluster limit " + std::to_string(cfg.limit) +
                " is below the largest family size " +
                std::to_string(net.max_family_size()) +
                "; clusters cannot shrink below families");

  SplitNetwork sn = SplitNetwork::identity(net);
  for (;;) {
    const Network& cur = sn.net();
    Jointree jt = build_jointree(cur, min_fill_order(cur));
    if (jt.max_cluster_size() <= cfg.limit) return sn;

    // Candidates: variables with children, excluding parentless
    // single-child variables, whose full split is a structural no-op
    // (the clone would be an identical parentless single-child root).
    int best = -1;
    double best_score = 0.0;
    for (int v = 0; v < cur.num_vars(); ++v) {
      if (cur.children(v).empty()) continue;
      if (cur.parents(v).empty() && cur.children(v).size() == 1) continue;
      double score = removal_score(jt, cur, v);
      if (best < 0 || score > best_score) {
        best = v;
        best_score = score;
      }
    }
    if (best < 0) {
      // Every variable is childless or an unsplittable root: clusters
      // are down to families, which fit by the precondition.
      return sn;
    }
    sn = full_split(sn, best);
  }
}

}  // namespace splitmpe
