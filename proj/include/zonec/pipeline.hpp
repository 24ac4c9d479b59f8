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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "zonec/circuit.hpp"
#include "zonec/frontend.hpp"
#include "zonec/protocols.hpp"
#include "zonec/rewrite.hpp"

namespace zonec {

/// Standard: path synthesis, RZZ via CX RZ CX, layer-by-layer zone steps.
/// Optimized: fountain synthesis, native ZZ protocol, aligned zone steps.
enum class CompileMode { Standard, Optimized };

std::string_view mode_name(CompileMode mode);

struct PipelineOptions {
  CompileMode mode = CompileMode::Optimized;
  RzzProtocol protocol = RzzProtocol::Adiabatic;
  double phi2 = 0.0;
  bool x_basis = false;
  /// Replace movement-based SWAP with 3 CZ between four H layers.
  bool gate_based_swap = false;
  /// Explicit pass names; empty selects the mode default (see default_passes).
  std::vector<std::string> passes;
  /// When set, the circuit is dumped here after every pass.
  std::ostream* trace = nullptr;
};

/// Pass names: synth-fountain, synth-path, substitute-rzz, substitute-rzz-cz,
/// decompose-rzz, lower-cx, cancel-h, x-basis, lower-swap, lower-swap-gates,
/// layered-lowering, and one final program builder: align, segment, layers.
std::vector<std::string> default_passes(const PipelineOptions& options);
const std::vector<std::string>& known_passes();

/// Circuit or Pauli-term input. Pauli terms are synthesized in file order.
struct Workload {
  std::string label;
  bool is_pauli = false;
  Circuit circuit;
  PauliTermFile terms;
  /// Append MEASURE on every qubit after synthesis.
  bool measure_all = false;

  std::size_t num_qubits() const { return is_pauli ? terms.num_qubits : circuit.num_qubits(); }
};

Workload workload_from_circuit(Circuit circuit, std::string label = "circuit");
Workload workload_from_terms(PauliTermFile terms, std::string label = "pauli");
/// Benchmark family instance. Every family ends with MEASURE on all qubits.
Workload build_bench(const BenchmarkSpec& spec);

struct CompileResult {
  /// Circuit after the last circuit pass (the scheduled gate set).
  Circuit lowered;
  ZoneStepProgram program;
  /// Permutation left by movement-based SWAP lowering (identity if none).
  std::vector<Qubit> final_wire;
  GateCounts counts;
  std::size_t phase_only_terms = 0;
  std::vector<std::string> passes;
};

CompileResult compile(const Workload& workload, const PipelineOptions& options);

/// Unitary reference for a workload: input circuit, or the path-synthesized
/// term product, without MEASURE.
Circuit reference_circuit(const Workload& workload);

/// 7 data atoms per logical gate.
inline constexpr std::size_t kPhysicalPerLogicalGate = 7;
std::size_t physical_gate_count(const GateCounts& counts);

}  // namespace zonec
