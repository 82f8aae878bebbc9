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

#ifndef SPLITMPE_UAI_HPP
#define SPLITMPE_UAI_HPP

#include <iosfwd>
#include <string>

#include "splitmpe/network.hpp"

namespace splitmpe {

/// Reads a network in the UAI BAYES text format: "BAYES", variable count,
/// cardinalities, factor count (one CPT per variable, child listed last in
/// each scope), scopes, then tables in row-major order with the last scope
/// variable varying fastest. Whitespace-delimited throughout.
Network parse_uai(std::istream& in);
Network parse_uai(const std::string& text);
Network load_uai(const std::string& path);

/// Reads UAI evidence: a count followed by (variable, value) index pairs.
Instantiation parse_evidence(std::istream& in, const Network& net);
Instantiation parse_evidence(const std::string& text, const Network& net);
Instantiation load_evidence(const std::string& path, const Network& net);

/// Writes the UAI BAYES text for `net`. Tables are emitted in linear
/// domain with shortest round-trip formatting, so parse(serialize(net))
/// reproduces the tables exactly.
void serialize_uai(const Network& net, std::ostream& out);
std::string serialize_uai(const Network& net);

void serialize_evidence(const Instantiation& e, std::ostream& out);

}  // namespace splitmpe

#endif  // SPLITMPE_UAI_HPP
