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

#ifndef SPLITMPE_BENCH_HPP
#define SPLITMPE_BENCH_HPP

#include <iosfwd>
#include <string>

#include "splitmpe/coding.hpp"
#include "splitmpe/search.hpp"
#include "splitmpe/strategies.hpp"

namespace splitmpe {

/// Column order of the CSV emitted by run_bench.
extern const char* const kBenchCsvHeader;

/// One sweep row. Unavailable numeric fields (failed rows, skipped
/// search) are emitted as nan; time_ms is excluded from determinism
/// comparisons.
struct BenchRecord {
  std::string instance;
  double sigma;
  std::uint64_t seed;
  StrategyKind heuristic;
  int limit;
  int splits = -1;  // negative: unavailable
  int clones = -1;
  double beta_log;
  double bound_log;
  double mpe_log;
  std::string space;  // "full", "reduced" or "none"
  long long nodes = 0;
  double time_ms = 0.0;
};

struct BenchSettings {
  std::vector<StrategyKind> heuristics;
  std::vector<int> limits;
  std::vector<SearchSpace> spaces;  // empty: strategy and bound only
  bool use_bound = true;
};

struct BenchSummary {
  long long rows = 0;
  long long failures = 0;
};

void write_csv_header(std::ostream& out);
void write_csv_row(const BenchRecord& rec, std::ostream& out);

/// For each instance x heuristic x limit: builds the split network,
/// records splits, clones, beta and the root bound, then runs the search
/// per requested space. Rows that fail (e.g. a jointree limit below the
/// largest family) are emitted with nan fields and counted; the run
/// continues. Deterministic given seeds, up to the time_ms column.
BenchSummary run_bench(const std::vector<CodingSpec>& specs,
                       const BenchSettings& settings, std::ostream& csv);

}  // namespace splitmpe

#endif  // SPLITMPE_BENCH_HPP
