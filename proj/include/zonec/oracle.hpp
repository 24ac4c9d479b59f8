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

// Dense reference simulation used to check every rewrite. Little-endian:
// qubit 0 is the least significant bit of a basis index.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "zonec/circuit.hpp"
#include "zonec/kernels.hpp"
#include "zonec/matrix.hpp"

namespace zonec {

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxUnitaryQubits = 10;
inline constexpr std::size_t kMaxStatevectorQubits = 12;

DenseMatrix unitary_of(const Circuit& circuit,
                       kernels::Backend backend = kernels::Backend::OpenMP);

std::vector<cdouble> statevector_of(const Circuit& circuit, std::uint64_t initial_basis_state = 0,
                                    kernels::Backend backend = kernels::Backend::OpenMP);

/// <psi| P |psi> for a Pauli label (character i acts on qubit i).
double pauli_expectation(const std::vector<cdouble>& state, std::string_view label);

}  // namespace zonec
