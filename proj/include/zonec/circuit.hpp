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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zonec {

using Qubit = std::uint32_t;

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GateKind : std::uint8_t {
  H,
  X,
  RX,
  RZ,
  CX,
  CZ,
  SWAP,
  RZZ,
  CPHASE,
  LP,
  AD,
  MEASURE,
};

inline constexpr std::array<GateKind, 12> kAllGateKinds = {
    GateKind::H,   GateKind::X,      GateKind::RX, GateKind::RZ,
    GateKind::CX,  GateKind::CZ,     GateKind::SWAP, GateKind::RZZ,
    GateKind::CPHASE, GateKind::LP,  GateKind::AD, GateKind::MEASURE,
};

/// Execution zone a gate kind belongs to under the zoned (Type 1) policy.
enum class Zone : std::uint8_t { Storage, Entangling, Readout };

std::string_view gate_name(GateKind kind);
std::string_view zone_name(Zone zone);
std::size_t gate_arity(GateKind kind);
std::size_t gate_param_count(GateKind kind);
Zone gate_zone(GateKind kind);
bool is_two_qubit(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  std::array<Qubit, 2> qubits{0, 0};
  std::array<double, 2> params{0.0, 0.0};

  std::size_t arity() const { return gate_arity(kind); }
  std::span<const Qubit> operands() const { return {qubits.data(), arity()}; }
  bool touches(Qubit q) const;
  Zone zone() const { return gate_zone(kind); }
  bool operator==(const Gate&) const = default;
};

/// Ordered gate list over logical qubits. Gate order is program order.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  /// Validates operands against the kind's arity and the register size.
  Circuit& append(GateKind kind, std::initializer_list<Qubit> qubits,
                  std::initializer_list<double> params = {});
  Circuit& append(const Gate& gate);
  Circuit& append_all(const Circuit& other);

  /// Circuit with identical gates on a larger register.
  Circuit widened(std::size_t num_qubits) const;

  bool operator==(const Circuit&) const = default;

 private:
  void check(const Gate& gate) const;

  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
};

Gate make_gate(GateKind kind, std::initializer_list<Qubit> qubits,
               std::initializer_list<double> params = {});

/// ASAP layering: each entry is a list of gate indices into the circuit.
struct DependencyLayers {
  std::vector<std::vector<std::size_t>> layers;

  std::size_t depth() const { return layers.size(); }
};

DependencyLayers dependency_layers(const Circuit& circuit);

/// Per-gate list of immediate predecessors (previous gate on each operand).
std::vector<std::vector<std::size_t>> gate_predecessors(const Circuit& circuit);

struct GateCounts {
  std::map<GateKind, std::size_t> by_kind;
  std::size_t one_qubit = 0;  // excludes RZ and MEASURE
  std::size_t two_qubit = 0;
  std::size_t virtual_rz = 0;
  std::size_t measure = 0;

  std::size_t of(GateKind kind) const;
  std::size_t logical_total() const { return one_qubit + two_qubit + virtual_rz; }
};

GateCounts count_gates(const Circuit& circuit);

/// Canonical text form, one gate per line: `KIND q[i](,q[j]) (param,...)`.
/// The first line is `qubits <n>`.
std::string dump(const Circuit& circuit);
Circuit parse_dump(std::string_view text);

/// exp(-i theta/2 P); label character i acts on qubit i.
struct PauliTerm {
  std::string label;
  double theta = 0.0;

  std::size_t num_qubits() const { return label.size(); }
  std::size_t weight() const;
  bool operator==(const PauliTerm&) const = default;
};

/// Throws CircuitError unless the label is over {I,X,Y,Z} with the given length.
void validate_pauli(const PauliTerm& term, std::size_t num_qubits);

/// Angle normalized into (-2pi, 2pi] for comparisons only.
double normalize_angle(double radians);

}  // namespace zonec
