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

#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "splitmpe/bench.hpp"
#include "splitmpe/jointree.hpp"
#include "splitmpe/search.hpp"
#include "splitmpe/strategies.hpp"
#include "splitmpe/uai.hpp"

namespace {

using namespace splitmpe;

struct ModelArgs {
  std::string model_path;
  std::string evid_path;
};

void add_model_args(CLI::App* cmd, ModelArgs& args) {
  cmd->add_option("model", args.model_path, "UAI BAYES model file")->required();
  cmd->add_option("--evid", args.evid_path, "UAI evidence file");
}

std::pair<Network, Instantiation> load_inputs(const ModelArgs& args) {
  Network net = load_uai(args.model_path);
  Instantiation e;
  if (!args.evid_path.empty()) e = load_evidence(args.evid_path, net);
  return {std::move(net), std::move(e)};
}

StrategyKind parse_kind(const std::string& s) {
  if (s == "mb") return StrategyKind::MiniBucket;
  if (s == "jt") return StrategyKind::Jointree;
  throw CLI::ValidationError("--heuristic", "expected 'mb' or 'jt'");
}

SplitNetwork build_split(const Network& net, const Instantiation& e,
                         const std::string& heuristic, int limit) {
  StrategyKind kind = parse_kind(heuristic);
  if (kind == StrategyKind::MiniBucket)
    return mb_strategy(net, e, StrategyConfig{kind, limit, std::nullopt}).sn;
  return jt_strategy(net, StrategyConfig{kind, limit, std::nullopt});
}

void print_assignment(const Network& net, const Instantiation& x) {
  bool first = true;
  for (const auto& [v, val] : x) {
    std::cout << (first ? "" : " ") << net.name(v) << "=" << val;
    first = false;
  }
  std::cout << "\n";
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact MPE inference, mini-bucket bounds via node splitting, "
               "and branch-and-bound search over split variables"};
  app.require_subcommand(1);

  // exact
  ModelArgs exact_args;
  bool exact_sum = false;
  CLI::App* exact = app.add_subcommand("exact", "Exact MPE (or Pr(e) with --sum)");
  add_model_args(exact, exact_args);
  exact->add_flag("--sum", exact_sum, "Compute probability of evidence instead");

  // split
  ModelArgs split_args;
  std::string split_heur = "mb", split_out, split_map;
  int split_limit = 0;
  CLI::App* split = app.add_subcommand("split", "Write a split network and mapping");
  add_model_args(split, split_args);
  split->add_option("--heuristic", split_heur, "mb or jt")->required();
  split->add_option("--limit", split_limit, "size limit (variables)")->required();
  split->add_option("--out", split_out, "output UAI file")->required();
  split->add_option("--map", split_map, "output JSON mapping file")->required();

  // bound
  ModelArgs bound_args;
  std::string bound_heur = "mb";
  int bound_limit = 0;
  bool bound_sum = false;
  CLI::App* bound = app.add_subcommand("bound", "Upper bound from a split network");
  add_model_args(bound, bound_args);
  bound->add_option("--heuristic", bound_heur, "mb or jt")->required();
  bound->add_option("--limit", bound_limit, "size limit (variables)")->required();
  bound->add_flag("--sum", bound_sum, "Bound Pr(e) instead of the MPE");

  // search
  ModelArgs search_args;
  std::string search_heur = "mb", search_space = "reduced", search_log;
  int search_limit = 0;
  bool search_no_bound = false;
  CLI::App* search = app.add_subcommand("search", "Branch-and-bound MPE search");
  add_model_args(search, search_args);
  search->add_option("--heuristic", search_heur, "mb or jt")->required();
  search->add_option("--limit", search_limit, "size limit (variables)")->required();
  search->add_option("--space", search_space, "full or reduced");
  search->add_flag("--no-bound", search_no_bound, "Enumerate without bounds");
  search->add_option("--log", search_log, "per-node log file");

  // gen-coding
  CodingSpec gen_spec{16, 24, 4, 0.4, 1};
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen-coding", "Generate a coding network");
  gen->add_option("--k", gen_spec.k, "information bits");
  gen->add_option("--m", gen_spec.m, "redundant bits");
  gen->add_option("--parity-parents", gen_spec.parents_per_parity, "check degree");
  gen->add_option("--sigma", gen_spec.sigma, "channel noise stddev");
  gen->add_option("--seed", gen_spec.seed, "RNG seed");
  gen->add_option("--out", gen_out, "output prefix (.uai and .evid)")->required();

  // bench-coding
  std::string bench_sigmas = "0.2,0.3,0.4,0.5,0.6,0.7,0.8";
  std::string bench_limits = "4,5,6,7,8,9,10";
  std::string bench_heurs = "mb,jt";
  std::string bench_spaces = "reduced,full";
  std::string bench_csv;
  int bench_seeds = 6, bench_k = 16, bench_m = 24, bench_p = 4;
  std::uint64_t bench_seed_base = 1;
  CLI::App* bench = app.add_subcommand("bench-coding", "Sweep strategies over a coding ensemble");
  bench->add_option("--sigmas", bench_sigmas, "comma-separated noise levels");
  bench->add_option("--seeds-per-sigma", bench_seeds, "instances per noise level");
  bench->add_option("--limits", bench_limits, "comma-separated size limits");
  bench->add_option("--heuristics", bench_heurs, "comma-separated subset of mb,jt");
  bench->add_option("--spaces", bench_spaces, "comma-separated subset of reduced,full,none");
  bench->add_option("--k", bench_k, "information bits");
  bench->add_option("--m", bench_m, "redundant bits");
  bench->add_option("--parity-parents", bench_p, "check degree");
  bench->add_option("--seed-base", bench_seed_base, "first RNG seed");
  bench->add_option("--csv", bench_csv, "output CSV file")->required();

  // trace
  ModelArgs trace_args;
  std::string trace_dot;
  int trace_ibound = 0;
  CLI::App* trace = app.add_subcommand("trace", "Export an elimination trace as DOT");
  add_model_args(trace, trace_args);
  trace->add_option("--dot", trace_dot, "output DOT file")->required();
  trace->add_option("--ibound", trace_ibound, "mini-bucket ibound (exact VE if omitted)");

  CLI11_PARSE(app, argc, argv);

  if (exact->parsed()) {
    auto [net, e] = load_inputs(exact_args);
    EliminationOrder order = min_fill_order(net);
    if (exact_sum) {
      double v = ve(net, e, order, ElimOp::Sum).log_value;
      std::cout << "log_pe " << v << "\npe " << std::exp(v) << "\n";
    } else {
      VeResult r = ve(net, e, order, ElimOp::Max);
      std::cout << "log_mpe " << r.log_value << "\nmpe " << std::exp(r.log_value)
                << "\nargmax ";
      print_assignment(net, r.argmax);
    }
  } else if (split->parsed()) {
    auto [net, e] = load_inputs(split_args);
    SplitNetwork sn = build_split(net, e, split_heur, split_limit);
    std::ofstream out(split_out);
    if (!out) throw Error("cannot write " + split_out);
    serialize_uai(sn.net(), out);
    std::ofstream map(split_map);
    if (!map) throw Error("cannot write " + split_map);
    map << mapping_to_json(sn);
    std::cout << "splits " << sn.split_base_variables().size() << "\nclones "
              << sn.clone_count() << "\nbeta_log " << sn.beta_log() << "\n";
  } else if (bound->parsed()) {
    auto [net, e] = load_inputs(bound_args);
    SplitNetwork sn = build_split(net, e, bound_heur, bound_limit);
    double v = bound_sum ? pe_bound(sn, e) : mpe_bound(sn, e);
    std::cout << (bound_sum ? "log_pe_bound " : "log_mpe_bound ") << v << "\n"
              << (bound_sum ? "pe_bound " : "mpe_bound ") << std::exp(v) << "\n";
  } else if (search->parsed()) {
    auto [net, e] = load_inputs(search_args);
    SplitNetwork sn = build_split(net, e, search_heur, search_limit);
    SearchOptions opts;
    if (search_space == "full")
      opts.space = SearchSpace::Full;
    else if (search_space == "reduced")
      opts.space = SearchSpace::Reduced;
    else
      throw CLI::ValidationError("--space", "expected 'full' or 'reduced'");
    opts.use_bound = !search_no_bound;
    std::ofstream log_file;
    if (!search_log.empty()) {
      log_file.open(search_log);
      if (!log_file) throw Error("cannot write " + search_log);
      opts.node_log = &log_file;
    }
    SearchResult r = split_bnb(sn, e, opts);
    std::cout << "log_mpe " << r.mpe_log << "\nmpe " << std::exp(r.mpe_log)
              << "\nnodes " << r.nodes_visited << "\nbounds_evaluated "
              << r.bounds_evaluated << "\nargmax ";
    print_assignment(net, r.argmax);
  } else if (gen->parsed()) {
    CodingInstance inst = gen_coding_network(gen_spec);
    std::ofstream uai(gen_out + ".uai");
    if (!uai) throw Error("cannot write " + gen_out + ".uai");
    serialize_uai(inst.net, uai);
    std::ofstream evid(gen_out + ".evid");
    if (!evid) throw Error("cannot write " + gen_out + ".evid");
    serialize_evidence(inst.evidence, evid);
    std::cout << "variables " << inst.net.num_vars() << "\nevidence "
              << inst.evidence.size() << "\n";
  } else if (bench->parsed()) {
    std::vector<CodingSpec> specs;
    for (double sigma : parse_double_list(bench_sigmas))
      for (int s = 0; s < bench_seeds; ++s)
        specs.push_back(CodingSpec{bench_k, bench_m, bench_p, sigma,
                                   bench_seed_base + static_cast<std::uint64_t>(s)});
    BenchSettings settings;
    {
      std::stringstream ss(bench_heurs);
      std::string tok;
      while (std::getline(ss, tok, ',')) settings.heuristics.push_back(parse_kind(tok));
    }
    settings.limits = parse_int_list(bench_limits);
    {
      std::stringstream ss(bench_spaces);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok == "reduced")
          settings.spaces.push_back(SearchSpace::Reduced);
        else if (tok == "full")
          settings.spaces.push_back(SearchSpace::Full);
        else if (tok != "none")
          throw CLI::ValidationError("--spaces", "expected reduced, full or none");
      }
    }
    std::ofstream csv(bench_csv);
    if (!csv) throw Error("cannot write " + bench_csv);
    BenchSummary s = run_bench(specs, settings, csv);
    std::cout << "rows " << s.rows << "\nfailures " << s.failures << "\n";
  } else if (trace->parsed()) {
    auto [net, e] = load_inputs(trace_args);
    EliminationOrder order = min_fill_order(net);
    Trace t;
    if (trace_ibound > 0)
      t = mbe(net, e, order, trace_ibound, ElimOp::Max).trace;
    else
      t = ve(net, e, order, ElimOp::Max).trace;
    std::ofstream out(trace_dot);
    if (!out) throw Error("cannot write " + trace_dot);
    out << trace_to_dot(t, net);
    std::cout << "steps " << t.steps.size() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
