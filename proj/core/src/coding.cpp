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

#include "splitmpe/coding.hpp"

#include <algorithm>
#include <cmath>

#include "splitmpe/error.hpp"

namespace splitmpe {

double PortableRng::uniform() {
  return (gen_() >> 11) * 0x1.0p-53;
}

int PortableRng::uniform_int(int n) {
  // Rejection keeps the draw unbiased and platform-stable.
  const std::uint64_t bound = n;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return static_cast<int>(x % bound);
}

double PortableRng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  while (u1 == 0.0) u1 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<int> PortableRng::sample_without_replacement(int count, int n) {
  std::vector<int> picked;
  picked.reserve(count);
  while (static_cast<int>(picked.size()) < count) {
    int x = uniform_int(n);
    if (std::find(picked.begin(), picked.end(), x) == picked.end())
      picked.push_back(x);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

CodingInstance gen_coding_network(const CodingSpec& spec) {
  if (spec.k < 1 || spec.m < 1)
    throw Error("coding spec requires k >= 1 and m >= 1");
  if (spec.sigma <= 0.0) throw Error("coding spec requires sigma > 0");
  if (spec.parents_per_parity < 1 || spec.parents_per_parity > spec.k)
    throw Error("parents_per_parity must be in [1, k]");

  PortableRng rng(spec.seed);
  const int k = spec.k, m = spec.m, p = spec.parents_per_parity;
  const int n_bits = k + m;
  const int n = 2 * n_bits;  // bits plus one channel leaf each

  std::vector<Variable> vars;
  std::vector<std::vector<int>> parents(n);
  std::vector<std::vector<double>> tables(n);
  vars.reserve(n);

  for (int i = 0; i < k; ++i) {
    vars.push_back(Variable{i, "b" + std::to_string(i), 2});
    tables[i] = {0.5, 0.5};
  }
  for (int j = 0; j < m; ++j) {
    int id = k + j;
    vars.push_back(Variable{id, "p" + std::to_string(j), 2});
    parents[id] = rng.sample_without_replacement(p, k);
    // Deterministic XOR: column (1,0) when the parent bits have even
    // parity, (0,1) otherwise. Parent p-tuples enumerate row-major with
    // the last parent fastest; the child is fastest overall.
    std::vector<double> table(std::size_t{2} << p);
    for (std::size_t u = 0; u < (std::size_t{1} << p); ++u) {
      int parity = 0;
      for (int b = 0; b < p; ++b) parity ^= static_cast<int>(u >> (p - 1 - b)) & 1;
      table[2 * u] = parity == 0 ? 1.0 : 0.0;
      table[2 * u + 1] = parity == 0 ? 0.0 : 1.0;
    }
    tables[id] = std::move(table);
  }

  // Simulate the codeword from the model, then the channel.
  std::vector<int> codeword(n_bits);
  for (int i = 0; i < k; ++i) codeword[i] = rng.uniform() < 0.5 ? 0 : 1;
  for (int j = 0; j < m; ++j) {
    int parity = 0;
    for (int b : parents[k + j]) parity ^= codeword[b];
    codeword[k + j] = parity;
  }

  Instantiation evidence;
  for (int t = 0; t < n_bits; ++t) {
    int id = n_bits + t;
    vars.push_back(Variable{id, "y" + std::to_string(t), 2});
    parents[id] = {t};
    double y = (2.0 * codeword[t] - 1.0) + spec.sigma * rng.normal();
    // Normalized likelihood pair for bit = 0 / bit = 1 under BPSK.
    double a0 = -(y + 1.0) * (y + 1.0) / (2.0 * spec.sigma * spec.sigma);
    double a1 = -(y - 1.0) * (y - 1.0) / (2.0 * spec.sigma * spec.sigma);
    double shift = std::max(a0, a1);
    double w0 = std::exp(a0 - shift), w1 = std::exp(a1 - shift);
    double q0 = w0 / (w0 + w1), q1 = w1 / (w0 + w1);
    // Row for parent value v: P(leaf = 0 | v) = q_v, so observing state 0
    // contributes exactly the normalized likelihoods.
    tables[id] = {q0, q1, q1, q0};
    evidence.set(id, 0);
  }

  CodingInstance out{Network::from_linear_cpts(std::move(vars), std::move(parents),
                                               std::move(tables)),
                     std::move(evidence), std::move(codeword)};
  return out;
}

}  // namespace splitmpe
