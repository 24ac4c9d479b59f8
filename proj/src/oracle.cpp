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

#include "zonec/oracle.hpp"

#include <span>

namespace zonec {

namespace {

void check_unitary_only(const Circuit& circuit) {
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::MEASURE) throw OracleError("oracle: circuit contains MEASURE");
  }
}

}  // namespace

DenseMatrix unitary_of(const Circuit& circuit, kernels::Backend backend) {
  const std::size_t n = circuit.num_qubits();
  if (n > kMaxUnitaryQubits) {
    throw OracleError("oracle: " + std::to_string(n) + " qubits exceeds unitary limit of " +
                      std::to_string(kMaxUnitaryQubits));
  }
  check_unitary_only(circuit);
  const std::int64_t dim = std::int64_t{1} << n;
  // Column c of U is U|c>; each column evolves independently.
  std::vector<cdouble> columns(static_cast<std::size_t>(dim * dim));
  auto evolve = [&](std::int64_t c) {
    std::span<cdouble> col(columns.data() + c * dim, static_cast<std::size_t>(dim));
    col[static_cast<std::size_t>(c)] = 1.0;
    for (const Gate& g : circuit.gates()) kernels::apply_gate(col, g, kernels::Backend::Serial);
  };
  if (backend == kernels::Backend::OpenMP) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < dim; ++c) evolve(c);
  } else {
    for (std::int64_t c = 0; c < dim; ++c) evolve(c);
  }
  DenseMatrix u(static_cast<std::size_t>(dim));
  for (std::int64_t c = 0; c < dim; ++c) {
    for (std::int64_t r = 0; r < dim; ++r) {
      u(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          columns[static_cast<std::size_t>(c * dim + r)];
    }
  }
  return u;
}

std::vector<cdouble> statevector_of(const Circuit& circuit, std::uint64_t initial_basis_state,
                                    kernels::Backend backend) {
  const std::size_t n = circuit.num_qubits();
  if (n > kMaxStatevectorQubits) {
    throw OracleError("oracle: " + std::to_string(n) + " qubits exceeds statevector limit of " +
                      std::to_string(kMaxStatevectorQubits));
  }
  check_unitary_only(circuit);
  std::vector<cdouble> state(std::size_t{1} << n);
  if (initial_basis_state >= state.size()) throw OracleError("oracle: initial state out of range");
  state[initial_basis_state] = 1.0;
  for (const Gate& g : circuit.gates()) kernels::apply_gate(state, g, backend);
  return state;
}

double pauli_expectation(const std::vector<cdouble>& state, std::string_view label) {
  if ((std::size_t{1} << label.size()) != state.size()) {
    throw OracleError("pauli_expectation: label length does not match state");
  }
  cdouble acc = 0.0;
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    // P|i> = phase * |j>
    std::uint64_t j = i;
    cdouble ph = 1.0;
    for (std::size_t q = 0; q < label.size(); ++q) {
      bool bit = (i >> q) & 1U;
      switch (label[q]) {
        case 'I':
          break;
        case 'X':
          j ^= std::uint64_t{1} << q;
          break;
        case 'Y':
          j ^= std::uint64_t{1} << q;
          ph *= bit ? cdouble(0, -1) : cdouble(0, 1);
          break;
        case 'Z':
          if (bit) ph = -ph;
          break;
        default:
          throw OracleError("pauli_expectation: bad Pauli character");
      }
    }
    acc += std::conj(state[j]) * ph * state[i];
  }
  return acc.real();
}

}  // namespace zonec
