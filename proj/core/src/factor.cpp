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

#include "splitmpe/factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "splitmpe/error.hpp"

namespace splitmpe {

namespace {

std::size_t table_size(const std::vector<int>& cards) {
  std::size_t n = 1;
  for (int c : cards) n *= static_cast<std::size_t>(c);
  return n;
}

void check_scope(const std::vector<int>& scope, const std::vector<int>& cards) {
  if (scope.size() != cards.size())
    throw Error("factor scope/cardinality length mismatch");
  for (std::size_t i = 0; i < scope.size(); ++i) {
    if (cards[i] < 1) throw Error("factor cardinality must be >= 1");
    for (std::size_t j = i + 1; j < scope.size(); ++j)
      if (scope[i] == scope[j])
        throw Error("factor scope contains duplicate variable " +
                    std::to_string(scope[i]));
  }
}

// Walks the table of `ref` in linear order while tracking an index into a
// second table whose scope is a superset mapped through `stride`.
struct Odometer {
  explicit Odometer(const std::vector<int>& cards) : cards(cards), pos(cards.size(), 0) {}

  // Advances one step; applies per-axis strides to the client indices.
  // Returns false once the full table has been exhausted.
  template <typename... Idx>
  bool step(const std::vector<std::size_t>* strides0, std::size_t* idx0,
            const std::vector<std::size_t>* strides1 = nullptr,
            std::size_t* idx1 = nullptr) {
    int k = static_cast<int>(cards.size()) - 1;
    while (k >= 0) {
      ++pos[k];
      if (strides0) *idx0 += (*strides0)[k];
      if (strides1) *idx1 += (*strides1)[k];
      if (pos[k] < cards[k]) return true;
      if (strides0) *idx0 -= (*strides0)[k] * static_cast<std::size_t>(cards[k]);
      if (strides1) *idx1 -= (*strides1)[k] * static_cast<std::size_t>(cards[k]);
      pos[k] = 0;
      --k;
    }
    return false;
  }

  const std::vector<int>& cards;
  std::vector<int> pos;
};

}  // namespace

Factor::Factor(std::vector<int> scope, std::vector<int> cards, double fill)
    : scope_(std::move(scope)), cards_(std::move(cards)) {
  check_scope(scope_, cards_);
  table_.assign(table_size(cards_), fill);
}

Factor::Factor(std::vector<int> scope, std::vector<int> cards,
               std::vector<double> log_table)
    : scope_(std::move(scope)), cards_(std::move(cards)), table_(std::move(log_table)) {
  check_scope(scope_, cards_);
  if (table_.size() != table_size(cards_))
    throw Error("factor table length does not match scope cardinalities");
}

bool Factor::mentions(int var) const {
  return std::find(scope_.begin(), scope_.end(), var) != scope_.end();
}

int Factor::position_of(int var) const {
  auto it = std::find(scope_.begin(), scope_.end(), var);
  return it == scope_.end() ? -1 : static_cast<int>(it - scope_.begin());
}

int Factor::card_of(int var) const {
  int p = position_of(var);
  if (p < 0) throw Error("variable " + std::to_string(var) + " not in factor scope");
  return cards_[p];
}

std::vector<std::size_t> Factor::strides() const {
  std::vector<std::size_t> s(scope_.size());
  std::size_t acc = 1;
  for (int i = static_cast<int>(scope_.size()) - 1; i >= 0; --i) {
    s[i] = acc;
    acc *= static_cast<std::size_t>(cards_[i]);
  }
  return s;
}

std::size_t Factor::index_of(const Instantiation& x) const {
  std::size_t idx = 0;
  auto s = strides();
  for (std::size_t i = 0; i < scope_.size(); ++i) {
    int v = x.value(scope_[i]);
    if (v < 0 || v >= cards_[i])
      throw Error("value out of range for variable " + std::to_string(scope_[i]));
    idx += s[i] * static_cast<std::size_t>(v);
  }
  return idx;
}

Factor multiply(const Factor& f, const Factor& g) {
  // Result scope: f's order, then g's unseen variables in g's order.
  std::vector<int> scope = f.scope();
  std::vector<int> cards = f.cards();
  for (std::size_t i = 0; i < g.scope().size(); ++i) {
    int v = g.scope()[i];
    int p = f.position_of(v);
    if (p >= 0) {
      if (f.cards()[p] != g.cards()[i])
        throw Error("cardinality mismatch for shared variable " + std::to_string(v));
    } else {
      scope.push_back(v);
      cards.push_back(g.cards()[i]);
    }
  }

  Factor out(scope, cards);
  auto f_str = f.strides();
  auto g_str = g.strides();
  std::vector<std::size_t> fs(scope.size(), 0), gs(scope.size(), 0);
  for (std::size_t i = 0; i < scope.size(); ++i) {
    int pf = f.position_of(scope[i]);
    if (pf >= 0) fs[i] = f_str[pf];
    int pg = g.position_of(scope[i]);
    if (pg >= 0) gs[i] = g_str[pg];
  }

  Odometer od(out.cards());
  std::size_t fi = 0, gi = 0, oi = 0;
  auto& table = out.table();
  for (;;) {
    table[oi++] = f.table()[fi] + g.table()[gi];
    if (!od.step<>(&fs, &fi, &gs, &gi)) break;
  }
  return out;
}

namespace {

// Shared walk for max/sum elimination: visits f's table once, mapping each
// entry to its cell in the var-free result table.
template <typename Visit>
void scan_marginal(const Factor& f, int var, const Factor& out, Visit&& visit) {
  int vp = f.position_of(var);
  if (vp < 0) throw Error("variable " + std::to_string(var) + " not in factor scope");
  auto out_str = out.strides();
  std::vector<std::size_t> rs(f.scope().size(), 0);
  for (std::size_t i = 0; i < f.scope().size(); ++i) {
    int p = out.position_of(f.scope()[i]);
    if (p >= 0) rs[i] = out_str[p];
  }
  Odometer od(f.cards());
  std::size_t ri = 0, fi = 0;
  for (;;) {
    visit(fi, ri, od.pos[vp]);
    ++fi;
    if (!od.step<>(&rs, &ri)) break;
  }
}

Factor drop_var(const Factor& f, int var) {
  std::vector<int> scope, cards;
  for (std::size_t i = 0; i < f.scope().size(); ++i) {
    if (f.scope()[i] != var) {
      scope.push_back(f.scope()[i]);
      cards.push_back(f.cards()[i]);
    }
  }
  return Factor(std::move(scope), std::move(cards), kLogZero);
}

}  // namespace

Factor max_out(const Factor& f, int var) {
  Factor out = drop_var(f, var);
  scan_marginal(f, var, out, [&](std::size_t fi, std::size_t ri, int) {
    if (f.table()[fi] > out.table()[ri]) out.table()[ri] = f.table()[fi];
  });
  return out;
}

Factor max_out_arg(const Factor& f, int var, std::vector<int>& argvals) {
  Factor out = drop_var(f, var);
  argvals.assign(out.size(), 0);
  // Linear scan visits each result cell's entries in ascending value order
  // of `var`, so strict > keeps the lowest maximizing index.
  scan_marginal(f, var, out, [&](std::size_t fi, std::size_t ri, int v) {
    if (f.table()[fi] > out.table()[ri]) {
      out.table()[ri] = f.table()[fi];
      argvals[ri] = v;
    }
  });
  return out;
}

Factor sum_out(const Factor& f, int var) {
  Factor shift = max_out(f, var);
  Factor out = drop_var(f, var);
  std::vector<double> acc(out.size(), 0.0);
  scan_marginal(f, var, out, [&](std::size_t fi, std::size_t ri, int) {
    if (shift.table()[ri] != kLogZero)
      acc[ri] += std::exp(f.table()[fi] - shift.table()[ri]);
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.table()[i] =
        shift.table()[i] == kLogZero ? kLogZero : shift.table()[i] + std::log(acc[i]);
  }
  return out;
}

Factor condition(const Factor& f, const Instantiation& e) {
  std::vector<int> scope, cards;
  std::size_t base = 0;
  auto f_str = f.strides();
  for (std::size_t i = 0; i < f.scope().size(); ++i) {
    int v = f.scope()[i];
    if (e.assigned(v)) {
      int val = e.value(v);
      if (val < 0 || val >= f.cards()[i])
        throw Error("evidence value out of range for variable " + std::to_string(v));
      base += f_str[i] * static_cast<std::size_t>(val);
    } else {
      scope.push_back(v);
      cards.push_back(f.cards()[i]);
    }
  }
  Factor out(scope, cards);
  std::vector<std::size_t> fs(out.scope().size());
  for (std::size_t i = 0; i < out.scope().size(); ++i)
    fs[i] = f_str[f.position_of(out.scope()[i])];

  Odometer od(out.cards());
  std::size_t fi = base, oi = 0;
  for (;;) {
    out.table()[oi++] = f.table()[fi];
    if (!od.step<>(&fs, &fi)) break;
  }
  return out;
}

}  // namespace splitmpe
