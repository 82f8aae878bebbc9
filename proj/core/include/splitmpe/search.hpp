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

#ifndef SPLITMPE_SEARCH_HPP
#define SPLITMPE_SEARCH_HPP

#include <iosfwd>

#include "splitmpe/splitting.hpp"

namespace splitmpe {

enum class SearchSpace { Full, Reduced };

struct SearchOptions {
  SearchSpace space = SearchSpace::Reduced;

  /// Off: no bounds are computed; the search enumerates its space and
  /// evaluates complete nodes exactly (loop-cutset conditioning when the
  /// split network is singly connected and the space is reduced).
  bool use_bound = true;

  /// Static branching order. Empty selects the default: split variables
  /// by descending clone count (ties by id), full space appending the
  /// remaining variables by id. In reduced space a custom order must be
  /// a permutation of the split variables; in full space it must cover
  /// all base variables with the split variables first.
  std::vector<int> variable_order;

  /// Initial incumbent (log). Must be a valid lower bound on the MPE;
  /// the default reproduces a trivial 0.0 seed.
  double seed_lower_bound = kLogZero;

  ExactEngine engine = ExactEngine::Jointree;

  /// Optional per-node log: depth, assignment, bound, incumbent.
  std::ostream* node_log = nullptr;
};

struct SearchResult {
  double mpe_log;         // q*
  Instantiation argmax;   // complete over base variables; empty if none found
  long long nodes_visited;
  long long bounds_evaluated;
};

/// Depth-first branch-and-bound over the split network's upper bound.
/// In reduced space a node with every split variable assigned is exact
/// and becomes the incumbent without descending further; in full space
/// completeness means all base variables assigned. Returns the exact
/// MPE_p(base, e) and a witnessing complete instantiation.
SearchResult split_bnb(const SplitNetwork& sn, const Instantiation& e,
                       const SearchOptions& opts = {});

}  // namespace splitmpe

#endif  // SPLITMPE_SEARCH_HPP
