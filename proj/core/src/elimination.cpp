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

#include "splitmpe/elimination.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "splitmpe/error.hpp"

namespace splitmpe {

int Trace::max_product_width() const {
  int w = 0;
  for (const TraceStep& s : steps)
    w = std::max(w, static_cast<int>(s.product_scope.size()));
  return w;
}

Partitioner greedy_partitioner() {
  return [](int /*var*/,
            const std::vector<std::pair<int, std::vector<int>>>& bucket,
            int ibound) {
    std::vector<std::vector<int>> groups;
    std::vector<bool> placed(bucket.size(), false);
    for (std::size_t seed = 0; seed < bucket.size(); ++seed) {
      if (placed[seed]) continue;
      std::vector<int> group{bucket[seed].first};
      placed[seed] = true;
      std::set<int> scope(bucket[seed].second.begin(), bucket[seed].second.end());
      for (std::size_t j = seed + 1; j < bucket.size(); ++j) {
        if (placed[j]) continue;
        std::set<int> merged = scope;
        merged.insert(bucket[j].second.begin(), bucket[j].second.end());
        if (static_cast<int>(merged.size()) <= ibound) {
          group.push_back(bucket[j].first);
          placed[j] = true;
          scope = std::move(merged);
        }
      }
      groups.push_back(std::move(group));
    }
    return groups;
  };
}

namespace {

struct PoolFactor {
  Factor factor;
  int id;
  int origin;    // owning variable of the CPT, or -1 for produced factors
  int producer;  // producing step index, or -1 for CPTs
  bool alive = true;
};

struct StepRecovery {
  int var;
  std::vector<int> scope;  // result factor layout (unsorted)
  std::vector<int> cards;
  std::vector<int> argvals;
};

struct RunResult {
  double log_value;
  Trace trace;
  std::vector<StepRecovery> recovery;  // only filled when requested
};

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Shared VE/MBE driver. A negative ibound means exact elimination (one
// group per bucket).
RunResult run_elimination(const Network& net, const Instantiation& e,
                          const EliminationOrder& order, ElimOp op, int ibound,
                          const Partitioner& part, bool record_argmax) {
  for (const auto& [v, x] : e) {
    if (v < 0 || v >= net.num_vars())
      throw Error("evidence variable " + std::to_string(v) + " out of range");
    if (x < 0 || x >= net.card(v))
      throw Error("evidence value out of range for variable " + std::to_string(v));
  }

  std::vector<PoolFactor> pool;
  double constant = 0.0;
  int next_id = 0;
  for (int i = 0; i < net.num_vars(); ++i) {
    Factor f = condition(net.cpt(i), e);
    if (f.is_scalar())
      constant += f.table()[0];
    else
      pool.push_back(PoolFactor{std::move(f), next_id++, i, -1});
  }

  std::set<int> pending;
  for (const PoolFactor& p : pool)
    for (int v : p.factor.scope()) pending.insert(v);
  {
    std::set<int> covered(order.begin(), order.end());
    for (int v : pending)
      if (!covered.count(v))
        throw Error("elimination order missing variable " + std::to_string(v));
  }

  RunResult out;
  out.trace.families.resize(net.num_vars());
  for (int i = 0; i < net.num_vars(); ++i) out.trace.families[i] = net.family(i);

  const int n_initial = next_id;
  for (int x : order) {
    std::vector<std::size_t> bucket_idx;
    std::vector<std::pair<int, std::vector<int>>> bucket;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i].alive && pool[i].factor.mentions(x)) {
        bucket_idx.push_back(i);
        bucket.emplace_back(pool[i].id, pool[i].factor.scope());
      }
    }
    if (bucket.empty()) continue;

    std::vector<std::vector<int>> groups;
    if (ibound < 0) {
      std::vector<int> all;
      for (const auto& [id, _] : bucket) all.push_back(id);
      groups.push_back(std::move(all));
    } else {
      groups = part(x, bucket, ibound);
      // The partition must cover the bucket exactly.
      std::set<int> bucket_ids, group_ids;
      for (const auto& [id, _] : bucket) bucket_ids.insert(id);
      std::size_t total = 0;
      for (const auto& g : groups) {
        total += g.size();
        group_ids.insert(g.begin(), g.end());
      }
      if (group_ids != bucket_ids || total != bucket_ids.size())
        throw Error("partitioner did not return a partition of the bucket for variable " +
                    std::to_string(x));
    }

    for (const std::vector<int>& group : groups) {
      TraceStep step;
      step.var = x;
      Factor product;
      bool first = true;
      for (std::size_t i : bucket_idx) {
        if (std::find(group.begin(), group.end(), pool[i].id) == group.end()) continue;
        product = first ? pool[i].factor : multiply(product, pool[i].factor);
        first = false;
        pool[i].alive = false;
        if (pool[i].origin >= 0)
          step.cpt_origins.push_back(pool[i].origin);
        else
          step.consumed.push_back(pool[i].producer);
      }
      step.product_scope = sorted(product.scope());

      Factor result;
      if (op == ElimOp::Max) {
        if (record_argmax) {
          StepRecovery rec;
          rec.var = x;
          result = max_out_arg(product, x, rec.argvals);
          rec.scope = result.scope();
          rec.cards = result.cards();
          out.recovery.push_back(std::move(rec));
        } else {
          result = max_out(product, x);
        }
      } else {
        result = sum_out(product, x);
      }
      step.result_scope = sorted(result.scope());
      out.trace.steps.push_back(std::move(step));

      int produced_id = n_initial + static_cast<int>(out.trace.steps.size()) - 1;
      if (result.is_scalar())
        constant += result.table()[0];
      else
        pool.push_back(
            PoolFactor{std::move(result), produced_id, -1,
                       static_cast<int>(out.trace.steps.size()) - 1});
    }
  }

  for (const PoolFactor& p : pool)
    if (p.alive && !p.factor.is_scalar())
      throw Error("elimination order missing variable " +
                  std::to_string(p.factor.scope().front()));

  out.log_value = constant;
  return out;
}

}  // namespace

VeResult ve(const Network& net, const Instantiation& e,
            const EliminationOrder& order, ElimOp op) {
  RunResult run = run_elimination(net, e, order, op, -1, Partitioner(),
                                  op == ElimOp::Max);
  VeResult out;
  out.log_value = run.log_value;
  out.trace = std::move(run.trace);
  if (op == ElimOp::Max) {
    // Recover a maximizer by replaying the steps backwards: every variable
    // in a step's result scope is eliminated (hence assigned) later.
    Instantiation amax = e;
    for (int s = static_cast<int>(run.recovery.size()) - 1; s >= 0; --s) {
      const StepRecovery& rec = run.recovery[s];
      std::size_t idx = 0, stride = 1;
      for (int i = static_cast<int>(rec.scope.size()) - 1; i >= 0; --i) {
        idx += stride * static_cast<std::size_t>(amax.value(rec.scope[i]));
        stride *= static_cast<std::size_t>(rec.cards[i]);
      }
      amax.set(rec.var, rec.argvals[idx]);
    }
    out.argmax = std::move(amax);
  }
  return out;
}

MbeResult mbe(const Network& net, const Instantiation& e,
              const EliminationOrder& order, int ibound, ElimOp op,
              const Partitioner& part) {
  if (ibound < 1) throw Error("ibound must be >= 1");
  RunResult run = run_elimination(net, e, order, op, ibound, part, false);
  return MbeResult{run.log_value, std::move(run.trace)};
}

std::vector<int> subtrace(const Trace& trace, int i) {
  if (i < 0 || i >= static_cast<int>(trace.steps.size()))
    throw Error("subtrace: step index " + std::to_string(i) + " out of range");
  const int x = trace.steps[i].var;
  std::vector<int> stack{i};
  std::set<int> seen{i};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int j : trace.steps[cur].consumed) {
      const std::vector<int>& fs = trace.steps[j].result_scope;
      if (std::find(fs.begin(), fs.end(), x) == fs.end()) continue;
      if (seen.insert(j).second) stack.push_back(j);
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

std::vector<int> basis(const Trace& trace, int i) {
  const int x = trace.steps.at(i).var;
  std::set<int> vars;
  for (int j : subtrace(trace, i)) {
    for (int origin : trace.steps[j].cpt_origins) {
      const std::vector<int>& fam = trace.families[origin];
      if (std::find(fam.begin(), fam.end(), x) != fam.end()) vars.insert(origin);
    }
  }
  return std::vector<int>(vars.begin(), vars.end());
}

std::string trace_to_dot(const Trace& trace, const Network& net) {
  std::ostringstream out;
  out << "digraph trace {\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    out << "  n" << i + 1 << " [label=\"" << i + 1 << ": eliminate "
        << net.name(trace.steps[i].var) << "\"];\n";
  }
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    for (int j : trace.steps[i].consumed) {
      out << "  n" << j + 1 << " -> n" << i + 1 << " [label=\"{";
      const auto& fs = trace.steps[j].result_scope;
      for (std::size_t k = 0; k < fs.size(); ++k)
        out << (k ? " " : "") << net.name(fs[k]);
      out << "}\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace splitmpe
