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

#include "splitmpe/bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>

#include "splitmpe/error.hpp"

namespace splitmpe {

const char* const kBenchCsvHeader =
    "instance,sigma,seed,heuristic,limit,splits,clones,beta_log,bound_log,"
    "mpe_log,space,nodes,time_ms";

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

const char* kind_name(StrategyKind k) {
  return k == StrategyKind::MiniBucket ? "mb" : "jt";
}

const double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

void write_csv_header(std::ostream& out) { out << kBenchCsvHeader << "\n"; }

void write_csv_row(const BenchRecord& r, std::ostream& out) {
  out << r.instance << "," << fmt(r.sigma) << "," << r.seed << ","
      << kind_name(r.heuristic) << "," << r.limit << ","
      << (r.splits < 0 ? "nan" : std::to_string(r.splits)) << ","
      << (r.clones < 0 ? "nan" : std::to_string(r.clones)) << ","
      << fmt(r.beta_log) << "," << fmt(r.bound_log) << "," << fmt(r.mpe_log)
      << "," << r.space << "," << r.nodes << "," << fmt(r.time_ms) << "\n";
}

BenchSummary run_bench(const std::vector<CodingSpec>& specs,
                       const BenchSettings& settings, std::ostream& csv) {
  using clock = std::chrono::steady_clock;
  BenchSummary summary;
  write_csv_header(csv);

  for (const CodingSpec& spec : specs) {
    CodingInstance inst = gen_coding_network(spec);
    std::string id = "k" + std::to_string(spec.k) + "m" + std::to_string(spec.m) +
                     "p" + std::to_string(spec.parents_per_parity) + "_sig" +
                     fmt(spec.sigma) + "_seed" + std::to_string(spec.seed);

    for (StrategyKind kind : settings.heuristics) {
      for (int limit : settings.limits) {
        BenchRecord base;
        base.instance = id;
        base.sigma = spec.sigma;
        base.seed = spec.seed;
        base.heuristic = kind;
        base.limit = limit;
        base.beta_log = kNan;
        base.bound_log = kNan;
        base.mpe_log = kNan;

        auto t0 = clock::now();
        SplitNetwork sn = SplitNetwork::identity(inst.net);
        bool ok = true;
        try {
          if (kind == StrategyKind::MiniBucket) {
            StrategyConfig cfg{StrategyKind::MiniBucket, limit, std::nullopt};
            sn = mb_strategy(inst.net, inst.evidence, cfg).sn;
          } else {
            StrategyConfig cfg{StrategyKind::Jointree, limit, std::nullopt};
            sn = jt_strategy(inst.net, cfg);
          }
          base.splits = static_cast<int>(sn.split_base_variables().size());
          base.clones = sn.clone_count();
          base.beta_log = sn.beta_log();
          base.bound_log = mpe_bound(sn, inst.evidence);
        } catch (const Error&) {
          ok = false;
        }

        if (!ok || settings.spaces.empty()) {
          base.space = "none";
          base.time_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
          write_csv_row(base, csv);
          ++summary.rows;
          if (!ok) ++summary.failures;
          continue;
        }

        for (SearchSpace space : settings.spaces) {
          BenchRecord rec = base;
          rec.space = space == SearchSpace::Full ? "full" : "reduced";
          auto s0 = clock::now();
          try {
            SearchOptions opts;
            opts.space = space;
            opts.use_bound = settings.use_bound;
            SearchResult r = split_bnb(sn, inst.evidence, opts);
            rec.mpe_log = r.mpe_log;
            rec.nodes = r.nodes_visited;
          } catch (const Error&) {
            ++summary.failures;
          }
          rec.time_ms =
              std::chrono::duration<double, std::milli>(clock::now() - s0).count();
          write_csv_row(rec, csv);
          ++summary.rows;
        }
      }
    }
  }
  return summary;
}

}  // namespace splitmpe
