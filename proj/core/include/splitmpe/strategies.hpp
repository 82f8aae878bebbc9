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

#ifndef SPLITMPE_STRATEGIES_HPP
#define SPLITMPE_STRATEGIES_HPP

#include <optional>

#include "splitmpe/splitting.hpp"

namespace splitmpe {

enum class StrategyKind { MiniBucket, Jointree };

/// Size limits are variable counts: the largest factor-product scope for
/// the mini-bucket strategy, the largest cluster for the jointree one.
struct StrategyConfig {
  StrategyKind kind;
  int limit;
  std::optional<EliminationOrder> order;  // MiniBucket only; default min-fill
};

struct StrategyResult {
  SplitNetwork sn;
  std::optional<EliminationOrder> order_prime;  // MiniBucket only
};

/// Greedy mini-bucket strategy: replays an MBE run at ibound = limit as
/// node splitting (see split_mbe). Minimizes clone introductions, not
/// split-variable count.
StrategyResult mb_strategy(const Network& net, const Instantiation& e,
                           const StrategyConfig& cfg);

/// Jointree strategy: rebuild a min-fill jointree and fully split the
/// variable with the highest removal_score until the largest cluster is
/// within the limit. Throws before looping if the limit is below the
/// largest family size (clusters cannot shrink below families).
SplitNetwork jt_strategy(const Network& net, const StrategyConfig& cfg);

}  // namespace splitmpe

#endif  // SPLITMPE_STRATEGIES_HPP
