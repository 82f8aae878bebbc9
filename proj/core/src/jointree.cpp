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

#include "splitmpe/jointree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "splitmpe/error.hpp"

namespace splitmpe {

int Jointree::max_cluster_size() const {
  int best = 0;
  for (const auto& c : clusters) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

double Jointree::total_table_size(const Network& net) const {
  auto table_size = [&](const std::vector<int>& vars) {
    double t = 1.0;
    for (int v : vars) t *= net.card(v);
    return t;
  };
  double total = 0.0;
  for (const auto& c : clusters) total += table_size(c);
  for (const auto& e : edges) total += table_size(e.separator);
  return total;
}

Jointree build_jointree(const Network& net, const EliminationOrder& order) {
  const int n = net.num_vars();
  if (static_cast<int>(order.size()) != n)
    throw Error("jointree order must be a permutation of the network variables");

  // Triangulate along the order, collecting elimination cliques.
  UndirectedGraph g = moral_graph(net);
  std::vector<std::vector<int>> cliques;
  for (int v : order) {
    std::vector<int> clique = g.neighbors(v);
    clique.push_back(v);
    std::sort(clique.begin(), clique.end());
    cliques.push_back(std::move(clique));
    g.eliminate(v);
  }

  // Keep maximal cliques only (drop any contained in another; exact
  // duplicates keep their first occurrence).
  Jointree jt;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cliques.size() && maximal; ++j) {
      if (i == j) continue;
      bool subset = std::includes(cliques[j].begin(), cliques[j].end(),
                                  cliques[i].begin(), cliques[i].end());
      if (subset && (cliques[j].size() > cliques[i].size() || j < i)) maximal = false;
    }
    if (maximal) jt.clusters.push_back(cliques[i]);
  }

  // Maximum-weight spanning tree over separator sizes (Kruskal on the
  // complete cluster graph, so zero-weight edges still span).
  const int nc = static_cast<int>(jt.clusters.size());
  struct Cand {
    int a, b, weight;
  };
  std::vector<Cand> cands;
  for (int a = 0; a < nc; ++a) {
    for (int b = a + 1; b < nc; ++b) {
      std::vector<int> sep;
      std::set_intersection(jt.clusters[a].begin(), jt.clusters[a].end(),
                            jt.clusters[b].begin(), jt.clusters[b].end(),
                            std::back_inserter(sep));
      cands.push_back(Cand{a, b, static_cast<int>(sep.size())});
    }
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& l, const Cand& r) { return l.weight > r.weight; });
  std::vector<int> uf(nc);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const Cand& c : cands) {
    int ra = find(c.a), rb = find(c.b);
    if (ra == rb) continue;
    uf[ra] = rb;
    std::vector<int> sep;
    std::set_intersection(jt.clusters[c.a].begin(), jt.clusters[c.a].end(),
                          jt.clusters[c.b].begin(), jt.clusters[c.b].end(),
                          std::back_inserter(sep));
    jt.edges.push_back(Jointree::Edge{c.a, c.b, std::move(sep)});
  }

  // Assign each family to the first cluster covering it.
  jt.family_cluster.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<int> fam = net.family(i);
    std::sort(fam.begin(), fam.end());
    for (int c = 0; c < nc; ++c) {
      if (std::includes(jt.clusters[c].begin(), jt.clusters[c].end(), fam.begin(),
                        fam.end())) {
        jt.family_cluster[i] = c;
        break;
      }
    }
    if (jt.family_cluster[i] < 0)
      throw Error("no cluster covers the family of variable " + std::to_string(i));
  }
  return jt;
}

double removal_score(const Jointree& jt, const Network& net, int x) {
  auto table_size = [&](const std::vector<int>& vars, bool drop_x) {
    double t = 1.0;
    for (int v : vars)
      if (!(drop_x && v == x)) t *= net.card(v);
    return t;
  };
  double score = 0.0;
  bool found = false;
  for (const auto& c : jt.clusters) {
    if (std::find(c.begin(), c.end(), x) == c.end()) continue;
    found = true;
    score += table_size(c, false) - table_size(c, true);
  }
  for (const auto& e : jt.edges) {
    if (std::find(e.separator.begin(), e.separator.end(), x) == e.separator.end())
      continue;
    score += table_size(e.separator, false) - table_size(e.separator, true);
  }
  if (!found)
    throw Error("variable " + std::to_string(x) + " appears in no cluster");
  return score;
}

JointreeEngine::JointreeEngine(const Network& net, Jointree jt)
    : net_(net), jt_(std::move(jt)) {
  const int nc = static_cast<int>(jt_.clusters.size());
  parent_.assign(nc, -1);

  // Root the tree at cluster 0 (and at the lowest-index cluster of every
  // remaining component, should the adjacency be a forest).
  std::vector<std::vector<int>> adj(nc);
  for (const auto& e : jt_.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(nc, false);
  visit_order_.clear();
  for (int root = 0; root < nc; ++root) {
    if (seen[root]) continue;
    std::vector<int> stack{root};
    seen[root] = true;
    std::vector<int> component;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      component.push_back(c);
      for (int d : adj[c]) {
        if (!seen[d]) {
          seen[d] = true;
          parent_[d] = c;
          stack.push_back(d);
        }
      }
    }
    // Children must be visited before their parents.
    visit_order_.insert(visit_order_.end(), component.rbegin(), component.rend());
  }
}

void JointreeEngine::ensure_potentials() const {
  if (materialized_) return;
  const int nc = static_cast<int>(jt_.clusters.size());
  std::vector<Factor> pots;
  pots.reserve(nc);
  for (int c = 0; c < nc; ++c) {
    std::vector<int> cards;
    for (int v : jt_.clusters[c]) cards.push_back(net_.card(v));
    pots.emplace_back(jt_.clusters[c], cards, 0.0);
  }
  for (int i = 0; i < net_.num_vars(); ++i) {
    int c = jt_.family_cluster[i];
    pots[c] = multiply(pots[c], net_.cpt(i));
  }
  potentials_ = std::move(pots);
  materialized_ = true;
}

namespace {

// Sets entries incompatible with var=val to -inf.
void mask_evidence(Factor& f, int var, int val) {
  int p = f.position_of(var);
  if (p < 0) return;
  auto strides = f.strides();
  const std::size_t stride = strides[p];
  const std::size_t card = static_cast<std::size_t>(f.cards()[p]);
  const std::size_t block = stride * card;
  for (std::size_t base = 0; base < f.size(); base += block)
    for (std::size_t v = 0; v < card; ++v) {
      if (static_cast<int>(v) == val) continue;
      for (std::size_t k = 0; k < stride; ++k)
        f.table()[base + v * stride + k] = kLogZero;
    }
}

Factor eliminate_to(const Factor& f, const std::vector<int>& keep, ElimOp op) {
  Factor cur = f;
  for (int v : f.scope()) {
    if (std::find(keep.begin(), keep.end(), v) != keep.end()) continue;
    cur = op == ElimOp::Max ? max_out(cur, v) : sum_out(cur, v);
  }
  return cur;
}

// Lowest-index argmax over the remaining (unassigned) scope of f.
void argmax_into(const Factor& f, Instantiation& out) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f.table()[i] > f.table()[best]) best = i;
  auto strides = f.strides();
  for (std::size_t i = 0; i < f.scope().size(); ++i) {
    int val = static_cast<int>(best / strides[i] % f.cards()[i]);
    out.set(f.scope()[i], val);
  }
}

}  // namespace

double JointreeEngine::propagate(const Instantiation& e, ElimOp op,
                                 Instantiation* argmax) const {
  ensure_potentials();
  const int nc = static_cast<int>(jt_.clusters.size());

  // Per-query scratch: masked potentials with incoming child messages
  // multiplied in as the collect pass reaches each cluster.
  std::vector<Factor> collected;
  collected.reserve(nc);
  for (int c = 0; c < nc; ++c) {
    Factor f = potentials_[c];
    for (const auto& [v, val] : e) mask_evidence(f, v, val);
    collected.push_back(std::move(f));
  }

  double value = 0.0;
  for (int c : visit_order_) {
    if (parent_[c] < 0) {
      // Root of a component: fold the remaining mass into the value.
      Factor total = eliminate_to(collected[c], {}, op);
      value += total.table()[0];
    } else {
      const auto& sep = [&]() -> const std::vector<int>& {
        for (const auto& e2 : jt_.edges)
          if ((e2.a == c && e2.b == parent_[c]) || (e2.b == c && e2.a == parent_[c]))
            return e2.separator;
        throw Error("jointree edge missing for cluster " + std::to_string(c));
      }();
      Factor msg = eliminate_to(collected[c], sep, op);
      collected[parent_[c]] = multiply(collected[parent_[c]], msg);
    }
  }

  if (argmax) {
    // Distribute outward: parents fix their separator values before the
    // children choose the rest.
    *argmax = Instantiation();
    for (auto it = visit_order_.rbegin(); it != visit_order_.rend(); ++it) {
      Factor f = condition(collected[*it], *argmax);
      argmax_into(f, *argmax);
    }
  }
  return value;
}

PropagationResult JointreeEngine::query_max(const Instantiation& e) const {
  PropagationResult out;
  out.log_value = propagate(e, ElimOp::Max, &out.argmax);
  return out;
}

double JointreeEngine::query_sum(const Instantiation& e) const {
  return propagate(e, ElimOp::Sum, nullptr);
}

PropagationResult max_propagate(const Jointree& jt, const Network& net,
                                const Instantiation& e) {
  return JointreeEngine(net, jt).query_max(e);
}

double sum_propagate(const Jointree& jt, const Network& net,
                     const Instantiation& e) {
  return JointreeEngine(net, jt).query_sum(e);
}

}  // namespace splitmpe
