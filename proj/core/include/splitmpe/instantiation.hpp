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

#ifndef SPLITMPE_INSTANTIATION_HPP
#define SPLITMPE_INSTANTIATION_HPP

#include <map>

#include "splitmpe/error.hpp"

namespace splitmpe {

/// A partial assignment of variables to value indices. Used both for
/// evidence and for (partial or complete) MPE candidates.
class Instantiation {
 public:
  Instantiation() = default;

  bool assigned(int var) const { return values_.count(var) != 0; }

  int value(int var) const {
    auto it = values_.find(var);
    if (it == values_.end())
      throw Error("variable " + std::to_string(var) + " is not assigned");
    return it->second;
  }

  void set(int var, int value) { values_[var] = value; }
  void unset(int var) { values_.erase(var); }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// Union with another instantiation; `other` wins on conflicts.
  Instantiation merged_with(const Instantiation& other) const {
    Instantiation out = *this;
    for (const auto& [v, x] : other.values_) out.values_[v] = x;
    return out;
  }

  bool operator==(const Instantiation& other) const {
    return values_ == other.values_;
  }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

 private:
  std::map<int, int> values_;
};

}  // namespace splitmpe

#endif  // SPLITMPE_INSTANTIATION_HPP
