// Copyright 2026 The zonec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zonec/circuit.hpp"

namespace zonec {

/// Input diagnostic carrying a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// OpenQASM 2.0 subset: one qreg, gates h x rx rz cx cz swap rzz measure.
Circuit parse_qasm(std::string_view text);
/// Emits the same subset; parse_qasm(to_qasm(c)) == c for circuits without
/// protocol-native gates (CPHASE, LP, AD have no qelib1 spelling).
std::string to_qasm(const Circuit& circuit);

struct PauliTermFile {
  std::size_t num_qubits = 0;
  std::vector<PauliTerm> terms;

  bool operator==(const PauliTermFile&) const = default;
};

PauliTermFile parse_pauli_file(std::string_view text);
std::string dump_pauli_file(const PauliTermFile& file);

enum class ChainShape { Path, Fountain, Parallel };

std::string_view chain_name(ChainShape chain);
std::optional<ChainShape> parse_chain(std::string_view name);

Circuit gen_ghz(std::size_t n, ChainShape chain);

PauliTermFile gen_ucc_random(std::size_t n, std::size_t num_terms, std::uint64_t seed);

struct WeightedEdge {
  Qubit a = 0;
  Qubit b = 0;
  double weight = 1.0;

  bool operator==(const WeightedEdge&) const = default;
};

struct Graph {
  std::size_t num_nodes = 0;
  std::vector<WeightedEdge> edges;
  /// Optional linear coefficients; empty or num_nodes entries.
  std::vector<double> node_weights;
};

Graph complete_graph(std::size_t n);
/// Preferential attachment, each new node linking to `m` existing nodes.
Graph power_law_graph(std::size_t n, std::uint64_t seed, std::size_t m = 2);

/// gammas and betas must each hold `p` entries. Each layer applies RZZ per
/// edge, RZ per weighted node, then RX(2 beta) per node.
Circuit gen_qaoa(const Graph& graph, std::size_t p, const std::vector<double>& gammas,
                 const std::vector<double>& betas);

/// Seeded QAOA angles: gammas in (0, pi), betas in (0, pi/2).
void qaoa_angles(std::size_t p, std::uint64_t seed, std::vector<double>& gammas,
                 std::vector<double>& betas);

/// Seven-qubit |+>_L preparation for the Steane code.
Circuit gen_steane_prep();

/// Stabilizer generators of the Steane code as Pauli labels over 7 qubits.
std::vector<std::string> steane_stabilizers();

enum class BenchFamily { Ghz, Ucc, QaoaSk, QaoaPl, Po };

/// Parsed `family:params` benchmark spec (see parse_bench_spec).
struct BenchmarkSpec {
  BenchFamily family = BenchFamily::Ghz;
  std::size_t num_qubits = 0;
  ChainShape chain = ChainShape::Path;
  std::size_t layers = 1;
  std::size_t num_terms = 10;
  std::uint64_t seed = 0;
};

std::string_view bench_family_name(BenchFamily family);

/// Grammar: ghz:<n>:<path|fountain|parallel>, ucc:<n>:<terms>,
/// qaoa-sk:<n>:<p>, qaoa-pl:<n>:<p>, po:<n>:<p>. Throws ParseError.
BenchmarkSpec parse_bench_spec(std::string_view text, std::uint64_t seed);

}  // namespace zonec
