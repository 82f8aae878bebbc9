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

#include "splitmpe/uai.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "splitmpe/error.hpp"

namespace splitmpe {

namespace {

// Whitespace-delimited token reader that tracks line numbers for error
// messages.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  int line() const { return line_; }

  std::string next(const char* what) {
    std::string tok;
    int c;
    while ((c = in_.get()) != EOF) {
      if (c == '\n') ++line_;
      if (!std::isspace(c)) break;
    }
    if (c == EOF)
      throw ParseError("line " + std::to_string(line_) +
                       ": unexpected end of input, expected " + what);
    tok.push_back(static_cast<char>(c));
    while ((c = in_.get()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(c));
    if (c == '\n') ++line_;
    return tok;
  }

  bool at_end() {
    int c;
    while ((c = in_.get()) != EOF) {
      if (c == '\n') ++line_;
      if (!std::isspace(c)) {
        in_.unget();
        return false;
      }
    }
    return true;
  }

  long next_int(const char* what) {
    std::string tok = next(what);
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("line " + std::to_string(line_) + ": expected " + what +
                       ", got '" + tok + "'");
    return value;
  }

  double next_double(const char* what) {
    std::string tok = next(what);
    try {
      std::size_t pos = 0;
      double value = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return value;
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_) + ": expected " + what +
                       ", got '" + tok + "'");
    }
  }

 private:
  std::istream& in_;
  int line_ = 1;
};

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

Network parse_uai(std::istream& in) {
  Tokenizer tok(in);

  std::string header = tok.next("BAYES header");
  if (header != "BAYES")
    throw ParseError("line " + std::to_string(tok.line()) +
                     ": expected 'BAYES' header, got '" + header + "'");

  long n = tok.next_int("variable count");
  if (n < 1)
    throw ParseError("line " + std::to_string(tok.line()) +
                     ": variable count must be >= 1, got " + std::to_string(n));

  std::vector<Variable> vars(n);
  for (long i = 0; i < n; ++i) {
    long card = tok.next_int("cardinality");
    if (card < 1)
      throw ParseError("line " + std::to_string(tok.line()) + ": variable " +
                       std::to_string(i) + " has cardinality " + std::to_string(card));
    vars[i] = Variable{static_cast<int>(i), "V" + std::to_string(i),
                       static_cast<int>(card)};
  }

  long nf = tok.next_int("factor count");
  if (nf != n)
    throw ParseError("line " + std::to_string(tok.line()) + ": factor count " +
                     std::to_string(nf) + " does not match variable count " +
                     std::to_string(n) + " (one CPT per variable)");

  // Scopes: k indices with the child last. Factors may appear in any
  // order; each variable must own exactly one CPT.
  std::vector<std::vector<int>> scopes(n);
  std::vector<int> owner(n);
  std::vector<bool> seen(n, false);
  for (long f = 0; f < n; ++f) {
    long k = tok.next_int("scope size");
    if (k < 1)
      throw ParseError("line " + std::to_string(tok.line()) +
                       ": factor " + std::to_string(f) + " has empty scope");
    std::vector<int> scope(k);
    for (long j = 0; j < k; ++j) {
      long v = tok.next_int("scope variable index");
      if (v < 0 || v >= n)
        throw ParseError("line " + std::to_string(tok.line()) +
                         ": scope index " + std::to_string(v) + " out of range");
      scope[j] = static_cast<int>(v);
    }
    int child = scope.back();
    if (seen[child])
      throw ParseError("line " + std::to_string(tok.line()) + ": variable " +
                       std::to_string(child) + " owns more than one CPT");
    seen[child] = true;
    owner[f] = child;
    scopes[f] = std::move(scope);
  }

  std::vector<std::vector<int>> parents(n);
  std::vector<std::vector<double>> tables(n);
  for (long f = 0; f < n; ++f) {
    long count = tok.next_int("table entry count");
    std::size_t expect = 1;
    for (int v : scopes[f]) expect *= static_cast<std::size_t>(vars[v].card);
    if (count < 0 || static_cast<std::size_t>(count) != expect)
      throw ParseError("line " + std::to_string(tok.line()) + ": table for variable " +
                       std::to_string(owner[f]) + " declares " + std::to_string(count) +
                       " entries, expected " + std::to_string(expect));
    std::vector<double> table(count);
    for (long j = 0; j < count; ++j) table[j] = tok.next_double("table entry");
    int child = owner[f];
    parents[child] = std::vector<int>(scopes[f].begin(), scopes[f].end() - 1);
    tables[child] = std::move(table);
  }

  return Network::from_linear_cpts(std::move(vars), std::move(parents),
                                   std::move(tables));
}

Network parse_uai(const std::string& text) {
  std::istringstream in(text);
  return parse_uai(in);
}

Network load_uai(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file: " + path);
  return parse_uai(in);
}

Instantiation parse_evidence(std::istream& in, const Network& net) {
  Tokenizer tok(in);
  long count = tok.next_int("evidence count");
  if (count < 0)
    throw ParseError("line " + std::to_string(tok.line()) +
                     ": negative evidence count");
  Instantiation e;
  for (long i = 0; i < count; ++i) {
    long var = tok.next_int("evidence variable index");
    if (var < 0 || var >= net.num_vars())
      throw ParseError("line " + std::to_string(tok.line()) +
                       ": evidence variable " + std::to_string(var) + " out of range");
    long val = tok.next_int("evidence value index");
    if (val < 0 || val >= net.card(static_cast<int>(var)))
      throw ParseError("line " + std::to_string(tok.line()) + ": value " +
                       std::to_string(val) + " out of range for variable " +
                       std::to_string(var) + " (cardinality " +
                       std::to_string(net.card(static_cast<int>(var))) + ")");
    if (e.assigned(static_cast<int>(var)))
      throw ParseError("line " + std::to_string(tok.line()) +
                       ": duplicate evidence for variable " + std::to_string(var));
    e.set(static_cast<int>(var), static_cast<int>(val));
  }
  return e;
}

Instantiation parse_evidence(const std::string& text, const Network& net) {
  std::istringstream in(text);
  return parse_evidence(in, net);
}

Instantiation load_evidence(const std::string& path, const Network& net) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open evidence file: " + path);
  return parse_evidence(in, net);
}

void serialize_uai(const Network& net, std::ostream& out) {
  const int n = net.num_vars();
  out << "BAYES\n" << n << "\n";
  for (int i = 0; i < n; ++i) out << (i ? " " : "") << net.card(i);
  out << "\n" << n << "\n";
  for (int i = 0; i < n; ++i) {
    std::vector<int> fam = net.family(i);
    out << fam.size();
    for (int v : fam) out << " " << v;
    out << "\n";
  }
  for (int i = 0; i < n; ++i) {
    const Factor& cpt = net.cpt(i);
    out << cpt.size() << "\n";
    for (std::size_t j = 0; j < cpt.size(); ++j) {
      double p = cpt.table()[j] == kLogZero ? 0.0 : std::exp(cpt.table()[j]);
      out << (j ? " " : "") << format_double(p);
    }
    out << "\n";
  }
}

std::string serialize_uai(const Network& net) {
  std::ostringstream out;
  serialize_uai(net, out);
  return out.str();
}

void serialize_evidence(const Instantiation& e, std::ostream& out) {
  out << e.size();
  for (const auto& [v, x] : e) out << " " << v << " " << x;
  out << "\n";
}

}  // namespace splitmpe
