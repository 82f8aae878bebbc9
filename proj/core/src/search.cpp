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

#include "splitmpe/search.hpp"

#include <algorithm>
#include <memory>
#include <ostream>
#include <set>

#include "splitmpe/error.hpp"
#include "splitmpe/jointree.hpp"

namespace splitmpe {

namespace {

std::vector<int> default_branch_order(const SplitNetwork& sn, SearchSpace space) {
  std::vector<int> split = sn.split_base_variables();
  std::stable_sort(split.begin(), split.end(), [&](int a, int b) {
    int ca = sn.clones_of_base(a), cb = sn.clones_of_base(b);
    return ca != cb ? ca > cb : a < b;
  });
  if (space == SearchSpace::Full) {
    std::set<int> in_split(split.begin(), split.end());
    for (int v = 0; v < sn.base().num_vars(); ++v)
      if (!in_split.count(v)) split.push_back(v);
  }
  return split;
}

void validate_order(const SplitNetwork& sn, SearchSpace space,
                    const std::vector<int>& order) {
  std::vector<int> split = sn.split_base_variables();
  std::set<int> split_set(split.begin(), split.end());
  std::set<int> seen;
  for (int v : order) {
    if (v < 0 || v >= sn.base().num_vars())
      throw Error("branch order variable " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second)
      throw Error("branch order repeats variable " + std::to_string(v));
  }
  if (space == SearchSpace::Reduced) {
    if (seen != split_set)
      throw Error("reduced-space branch order must be exactly the split variables");
  } else {
    if (static_cast<int>(order.size()) != sn.base().num_vars())
      throw Error("full-space branch order must cover all base variables");
    std::set<int> prefix(order.begin(), order.begin() + split.size());
    if (prefix != split_set)
      throw Error("full-space branch order must list the split variables first");
  }
}

// One engine per search; either a jointree built once for the split
// network, or plain variable elimination per query.
class BoundEngine {
 public:
  BoundEngine(const SplitNetwork& sn, ExactEngine kind) : sn_(sn), kind_(kind) {
    if (kind_ == ExactEngine::Jointree)
      jt_ = std::make_unique<JointreeEngine>(
          sn.net(), build_jointree(sn.net(), min_fill_order(sn.net())));
  }

  // beta-corrected exact MPE of the split network under (z, z-extended).
  double query(const Instantiation& z, Instantiation* witness) const {
    Instantiation full = z.merged_with(extend_instantiation(sn_, z));
    if (kind_ == ExactEngine::Jointree) {
      PropagationResult r = jt_->query_max(full);
      if (witness) *witness = std::move(r.argmax);
      return sn_.beta_log() + r.log_value;
    }
    VeResult r = ve(sn_.net(), full, min_fill_order(sn_.net()), ElimOp::Max);
    if (witness) *witness = std::move(r.argmax);
    return sn_.beta_log() + r.log_value;
  }

 private:
  const SplitNetwork& sn_;
  ExactEngine kind_;
  std::unique_ptr<JointreeEngine> jt_;
};

struct SearchState {
  const SplitNetwork& sn;
  const BoundEngine& engine;
  const SearchOptions& opts;
  const std::vector<int>& order;
  Instantiation z;
  double incumbent;
  Instantiation best;
  long long nodes = 0;
  long long evals = 0;

  bool complete() const {
    for (int v : order)
      if (!z.assigned(v)) return false;
    return true;
  }

  int next_unassigned() const {
    for (int v : order)
      if (!z.assigned(v)) return v;
    return -1;
  }

  void log_node(int depth, double bound) const {
    if (!opts.node_log) return;
    std::ostream& out = *opts.node_log;
    out << "depth=" << depth << " z={";
    bool first = true;
    for (const auto& [v, x] : z) {
      out << (first ? "" : ",") << sn.base().name(v) << "=" << x;
      first = false;
    }
    out << "} bound=" << bound << " incumbent=" << incumbent << "\n";
  }

  void visit(int depth) {
    ++nodes;
    const bool is_complete = complete();

    if (opts.use_bound || is_complete) {
      Instantiation witness;
      double q = engine.query(z, is_complete ? &witness : nullptr);
      ++evals;
      log_node(depth, q);
      if (!(q > incumbent)) return;  // Prunes ties; -inf never expands.
      if (is_complete) {
        incumbent = q;
        // Keep only base-variable values; clones agree by construction.
        best = Instantiation();
        for (const auto& [v, x] : witness)
          if (v < sn.base().num_vars()) best.set(v, x);
        return;
      }
    }

    int x = next_unassigned();
    for (int val = 0; val < sn.base().card(x); ++val) {
      z.set(x, val);
      visit(depth + 1);
      z.unset(x);
    }
  }
};

}  // namespace

SearchResult split_bnb(const SplitNetwork& sn, const Instantiation& e,
                       const SearchOptions& opts) {
  for (const auto& [v, x] : e) {
    if (v < 0 || v >= sn.base().num_vars())
      throw Error("evidence variable " + std::to_string(v) + " out of range");
    if (x < 0 || x >= sn.base().card(v))
      throw Error("evidence value out of range for variable " + std::to_string(v));
  }

  std::vector<int> order = opts.variable_order;
  if (order.empty())
    order = default_branch_order(sn, opts.space);
  else
    validate_order(sn, opts.space, order);

  BoundEngine engine(sn, opts.engine);
  SearchState state{sn, engine, opts, order, e, opts.seed_lower_bound, {}};
  state.visit(0);

  SearchResult out;
  out.mpe_log = state.best.empty() ? kLogZero : state.incumbent;
  out.argmax = std::move(state.best);
  out.nodes_visited = state.nodes;
  out.bounds_evaluated = state.evals;
  return out;
}

}  // namespace splitmpe
