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

// Circuit rewriting passes. Every pass except absorb_x_basis preserves the
// unitary up to global phase.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zonec/circuit.hpp"
#include "zonec/protocols.hpp"

namespace zonec {

Circuit lower_cx_to_cz(const Circuit& circuit);
Circuit cancel_hadamard_pairs(const Circuit& circuit);

/// RZZ(g) -> CX, RZ(g) on the second operand, CX. Equal up to global phase.
Circuit decompose_rzz(const Circuit& circuit);

/// Full exp(-i theta/2 P) with a shared-target CZ tree. `phase_only` is set
/// when the term is all-identity and the result is empty.
Circuit synth_pauli_fountain(const PauliTerm& term, bool& phase_only);
Circuit synth_pauli_fountain(const PauliTerm& term);
/// Textbook CX ladder onto the last non-identity qubit.
Circuit synth_pauli_path(const PauliTerm& term, bool& phase_only);
Circuit synth_pauli_path(const PauliTerm& term);

struct SubstituteOptions {
  RzzProtocol protocol = RzzProtocol::Adiabatic;
  double phi2 = 0.0;
  /// Also match the lowered H CZ H RZ H CZ H form.
  bool match_cz_idiom = true;
};

Circuit substitute_rzz(const Circuit& circuit, const SubstituteOptions& options = {});

/// Qubit relabeling recorded in place of a removed SWAP. It takes effect
/// before output gate `before_gate`; `a` and `b` are wire indices in the
/// output circuit.
struct RemapDirective {
  std::size_t before_gate = 0;
  Qubit a = 0;
  Qubit b = 0;

  bool operator==(const RemapDirective&) const = default;
};

struct SwapLowering {
  Circuit circuit;
  std::vector<RemapDirective> remaps;
  /// final_wire[w]: output wire holding the state the input left on wire w.
  std::vector<Qubit> final_wire;
};

SwapLowering lower_swap(const Circuit& circuit);

/// SWAP gates that move the state on final_wire[w] back to w; appending
/// them to a swap-lowered circuit restores the original unitary.
Circuit permutation_circuit(const std::vector<Qubit>& final_wire);

/// Reference lowering of each SWAP into 3 CZ between four H layers.
Circuit lower_swap_gate_based(const Circuit& circuit);

/// Drops H gates that directly follow |0> preparation and H gates directly
/// preceding a terminal MEASURE. Not unitary preserving: initialization and
/// readout move to the X basis.
Circuit absorb_x_basis(const Circuit& circuit);

/// CX-level circuit to CZ level, one dependency layer at a time: 1Q gates,
/// then pre-rotation H, then the 2Q gates, then post-rotation H.
Circuit layered_lowering(const Circuit& circuit);

struct ZoneStep {
  Zone zone = Zone::Storage;
  std::vector<Gate> gates;
  /// Index of each gate in the circuit the program was built from.
  std::vector<std::size_t> source;
};

struct ZoneStepProgram {
  std::size_t num_qubits = 0;
  std::vector<ZoneStep> steps;
  std::vector<RemapDirective> remaps;

  Circuit flatten() const;
  std::size_t gate_count() const;
  /// Adjacent storage/entangling step pairs; the readout step is not counted.
  std::size_t boundary_crossings() const;
};

/// Throws CircuitError if `program` breaks a ZoneStepProgram invariant
/// relative to `source`.
void check_program(const ZoneStepProgram& program, const Circuit& source);

/// Greedy same-zone hoisting. Input must be free of SWAP and CX.
ZoneStepProgram align_zone_steps(const Circuit& circuit);
/// Maximal same-zone runs in program order, MEASURE collected at the end.
ZoneStepProgram segment_program_order(const Circuit& circuit);
/// One storage segment then one entangling segment per dependency layer.
ZoneStepProgram unaligned_zone_steps(const Circuit& circuit);

std::string dump(const ZoneStepProgram& program);

}  // namespace zonec
