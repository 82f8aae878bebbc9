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

#ifndef SPLITMPE_CODING_HPP
#define SPLITMPE_CODING_HPP

#include <cstdint>
#include <random>

#include "splitmpe/network.hpp"

namespace splitmpe {

/// Deterministic random draws on top of std::mt19937_64 (a fully
/// specified generator, so instances reproduce across platforms).
/// Distribution shaping is done here rather than with the standard
/// distributions, whose outputs are implementation-defined.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1): top 53 bits of one 64-bit draw.
  double uniform();

  /// Uniform integer in [0, n).
  int uniform_int(int n);

  /// Standard normal via Box-Muller (two uniform draws per call).
  double normal();

  /// `count` distinct values from [0, n), ascending.
  std::vector<int> sample_without_replacement(int count, int n);

 private:
  std::mt19937_64 gen_;
};

/// A random error-correcting-code decoding instance: information bits,
/// parity checks over random distinct information bits, and one noisy
/// Gaussian channel observation per transmitted bit.
struct CodingSpec {
  int k;                       // information bits
  int m;                       // redundant (parity) bits
  int parents_per_parity = 4;  // check degree
  double sigma;                // channel noise stddev
  std::uint64_t seed;
};

struct CodingInstance {
  Network net;
  Instantiation evidence;      // every channel leaf observed in state 0
  std::vector<int> codeword;   // the simulated transmitted bits (k + m)
};

/// Builds the decoding network: k uniform binary roots, m deterministic
/// XOR parity nodes over `parents_per_parity` distinct information bits,
/// and k+m binary channel leaves whose CPT rows carry the normalized
/// Gaussian likelihoods of the simulated received value y = (2b-1) +
/// noise(0, sigma^2). Observing a leaf's state 0 injects the likelihood
/// pair, so the channel evidence lives in plain UAI tables.
CodingInstance gen_coding_network(const CodingSpec& spec);

}  // namespace splitmpe

#endif  // SPLITMPE_CODING_HPP
