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

#ifndef SPLITMPE_FACTOR_HPP
#define SPLITMPE_FACTOR_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "splitmpe/instantiation.hpp"

namespace splitmpe {

constexpr double kLogZero = -std::numeric_limits<double>::infinity();

/// Dense table over an ordered scope of discrete variables. Entries are
/// natural-log values; zero probability is stored as -inf. The table is
/// row-major with the LAST scope variable varying fastest.
class Factor {
 public:
  /// Scalar factor (empty scope, single entry).
  explicit Factor(double log_value = 0.0) : table_(1, log_value) {}

  /// Factor over `scope` with all entries set to `fill` (log-domain).
  /// Scope variables must be distinct, cardinalities >= 1.
  Factor(std::vector<int> scope, std::vector<int> cards, double fill = 0.0);

  /// Factor with an explicit log-domain table (length must match).
  Factor(std::vector<int> scope, std::vector<int> cards,
         std::vector<double> log_table);

  const std::vector<int>& scope() const { return scope_; }
  const std::vector<int>& cards() const { return cards_; }
  const std::vector<double>& table() const { return table_; }
  std::vector<double>& table() { return table_; }

  std::size_t size() const { return table_.size(); }
  bool is_scalar() const { return scope_.empty(); }

  bool mentions(int var) const;
  int position_of(int var) const;  // -1 if absent
  int card_of(int var) const;      // throws if absent

  /// Stride of each scope position (last position has stride 1).
  std::vector<std::size_t> strides() const;

  /// Table index of a (complete over the scope) instantiation.
  std::size_t index_of(const Instantiation& x) const;

  /// Log value at a complete-over-scope instantiation.
  double at(const Instantiation& x) const { return table_[index_of(x)]; }

 private:
  std::vector<int> scope_;
  std::vector<int> cards_;
  std::vector<double> table_;
};

/// Pointwise product (log-domain sum). Result scope is f's scope followed
/// by g's variables not already present, in g's order. -inf absorbs.
/// Throws if a shared variable has mismatched cardinalities.
Factor multiply(const Factor& f, const Factor& g);

/// Max-marginalize `var` out of f. Ties take the lowest value index.
Factor max_out(const Factor& f, int var);

/// As max_out, but also records per result entry the maximizing value
/// of `var` into `argvals` (same length as the result table).
Factor max_out_arg(const Factor& f, int var, std::vector<int>& argvals);

/// Sum-marginalize `var` out of f (log-sum-exp with max shift).
Factor sum_out(const Factor& f, int var);

/// Drop every variable assigned in `e` from f's scope, keeping the
/// entries consistent with `e`. Variables of `e` absent from the scope
/// are ignored.
Factor condition(const Factor& f, const Instantiation& e);

}  // namespace splitmpe

#endif  // SPLITMPE_FACTOR_HPP
