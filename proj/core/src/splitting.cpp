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

#include "splitmpe/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "splitmpe/error.hpp"
#include "splitmpe/jointree.hpp"

#include "json.hpp"

namespace splitmpe {

SplitNetwork SplitNetwork::identity(Network base) {
  SplitNetwork sn;
  sn.net_ = base;
  sn.base_ = std::move(base);
  return sn;
}

std::vector<int> SplitNetwork::split_variables() const {
  std::set<int> vars;
  for (const CloneInfo& c : clones_) vars.insert(c.original);
  return std::vector<int>(vars.begin(), vars.end());
}

std::vector<int> SplitNetwork::split_base_variables() const {
  // Chase originals through clone chains down to base ids.
  std::set<int> vars;
  const int nb = base_.num_vars();
  for (const CloneInfo& c : clones_) {
    int v = c.original;
    while (v >= nb) {
      // v is itself a clone: find its record (clone ids ascend in
      // creation order after the base ids).
      for (const CloneInfo& d : clones_)
        if (d.id == v) {
          v = d.original;
          break;
        }
    }
    vars.insert(v);
  }
  return std::vector<int>(vars.begin(), vars.end());
}

int SplitNetwork::clones_of_base(int base_var) const {
  const int nb = base_.num_vars();
  int count = 0;
  for (const CloneInfo& c : clones_) {
    int v = c.original;
    while (v >= nb) {
      for (const CloneInfo& d : clones_)
        if (d.id == v) {
          v = d.original;
          break;
        }
    }
    if (v == base_var) ++count;
  }
  return count;
}

SplitNetwork split_node_named(const SplitNetwork& sn, int x,
                              const std::vector<int>& children,
                              const std::string& clone_name) {
  const Network& net = sn.net_;
  if (x < 0 || x >= net.num_vars())
    throw Error("split_node: variable " + std::to_string(x) + " out of range");
  if (children.empty())
    throw Error("split_node: empty child set for variable " + std::to_string(x));
  {
    std::set<int> dedup(children.begin(), children.end());
    if (dedup.size() != children.size())
      throw Error("split_node: duplicate child in split set");
  }
  for (int y : children) {
    const auto& kids = net.children(x);
    if (std::find(kids.begin(), kids.end(), y) == kids.end())
      throw Error("split_node: variable " + std::to_string(y) +
                  " is not a child of " + std::to_string(x));
  }

  const int clone_id = net.num_vars();
  std::vector<Variable> vars = net.variables();
  vars.push_back(Variable{clone_id, clone_name, net.card(x)});

  std::vector<std::vector<int>> parents;
  std::vector<Factor> cpts;
  parents.reserve(clone_id + 1);
  cpts.reserve(clone_id + 1);
  for (int i = 0; i < net.num_vars(); ++i) {
    std::vector<int> ps = net.parents(i);
    if (std::find(children.begin(), children.end(), i) != children.end()) {
      // Rename x to the clone in both the parent list and the CPT scope;
      // the table is untouched.
      std::vector<int> scope = net.cpt(i).scope();
      for (std::size_t k = 0; k < ps.size(); ++k)
        if (ps[k] == x) {
          ps[k] = clone_id;
          scope[k] = clone_id;
        }
      cpts.emplace_back(std::move(scope), net.cpt(i).cards(), net.cpt(i).table());
    } else {
      cpts.push_back(net.cpt(i));
    }
    parents.push_back(std::move(ps));
  }

  // Uniform prior for the clone.
  parents.push_back({});
  cpts.emplace_back(std::vector<int>{clone_id}, std::vector<int>{net.card(x)},
                    std::vector<double>(net.card(x), -std::log(net.card(x))));

  SplitNetwork out;
  out.base_ = sn.base_;
  out.net_ = Network::from_log_cpts(std::move(vars), std::move(parents),
                                    std::move(cpts));
  out.clones_ = sn.clones_;
  std::vector<int> inherited = children;
  std::sort(inherited.begin(), inherited.end());
  out.clones_.push_back(CloneInfo{clone_id, x, std::move(inherited)});
  out.beta_log_ = sn.beta_log_ + std::log(net.card(x));
  return out;
}

SplitNetwork split_node(const SplitNetwork& sn, int x,
                        const std::vector<int>& children) {
  int nth = 1;
  for (const CloneInfo& c : sn.clones())
    if (c.original == x) ++nth;
  return split_node_named(sn, x, children,
                          sn.net().name(x) + "^" + std::to_string(nth));
}

SplitNetwork full_split(const SplitNetwork& sn, int x) {
  if (x < 0 || x >= sn.net().num_vars())
    throw Error("full_split: variable " + std::to_string(x) + " out of range");
  std::vector<int> kids = sn.net().children(x);
  if (kids.empty())
    throw Error("full_split: variable " + std::to_string(x) + " has no children");
  std::sort(kids.begin(), kids.end());
  SplitNetwork out = sn;
  for (int y : kids)
    out = split_node_named(out, x, {y}, sn.net().name(x) + "^" + sn.net().name(y));
  return out;
}

Instantiation extend_instantiation(const SplitNetwork& sn,
                                   const Instantiation& x) {
  // Clones are recorded in creation order, so an original that is itself
  // a clone is resolved before its own clones are visited.
  Instantiation combined = x;
  Instantiation clones_only;
  for (const CloneInfo& c : sn.clones()) {
    if (combined.assigned(c.original)) {
      int v = combined.value(c.original);
      combined.set(c.id, v);
      clones_only.set(c.id, v);
    }
  }
  return clones_only;
}

namespace {

double exact_value(const SplitNetwork& sn, const Instantiation& e, ElimOp op,
                   ExactEngine engine) {
  Instantiation full = e.merged_with(extend_instantiation(sn, e));
  if (engine == ExactEngine::VariableElimination) {
    return ve(sn.net(), full, min_fill_order(sn.net()), op).log_value;
  }
  Jointree jt = build_jointree(sn.net(), min_fill_order(sn.net()));
  JointreeEngine eng(sn.net(), jt);
  return op == ElimOp::Max ? eng.query_max(full).log_value : eng.query_sum(full);
}

}  // namespace

double mpe_bound(const SplitNetwork& sn, const Instantiation& e,
                 ExactEngine engine) {
  return sn.beta_log() + exact_value(sn, e, ElimOp::Max, engine);
}

double pe_bound(const SplitNetwork& sn, const Instantiation& e,
                ExactEngine engine) {
  return sn.beta_log() + exact_value(sn, e, ElimOp::Sum, engine);
}

SplitMbeResult split_mbe(const Network& net, const Instantiation& e,
                         const EliminationOrder& order, int ibound,
                         const Partitioner& part) {
  MbeResult run = mbe(net, e, order, ibound, ElimOp::Max, part);
  SplitMbeResult out{SplitNetwork::identity(net), {}};
  for (std::size_t i = 0; i < run.trace.steps.size(); ++i) {
    const int x = run.trace.steps[i].var;
    std::vector<int> b = basis(run.trace, static_cast<int>(i));
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      out.order_prime.push_back(x);
    } else {
      out.sn = split_node(out.sn, x, b);
      out.order_prime.push_back(out.sn.net().num_vars() - 1);
    }
  }
  return out;
}

std::string mapping_to_json(const SplitNetwork& sn) {
  nlohmann::json j;
  j["beta_log"] = sn.beta_log();
  j["clones"] = nlohmann::json::array();
  for (const CloneInfo& c : sn.clones()) {
    j["clones"].push_back({{"id", c.id},
                           {"name", sn.net().name(c.id)},
                           {"original", c.original},
                           {"children", c.children}});
  }
  return j.dump(2) + "\n";
}

}  // namespace splitmpe
