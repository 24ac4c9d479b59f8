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

// State-vector gate kernels. Qubit 0 is the least significant basis bit.
// `serial` is the reference implementation; `omp` splits the amplitude loop
// across OpenMP threads and must agree with it bit for bit.

#pragma once

#include <span>

#include "zonec/circuit.hpp"
#include "zonec/matrix.hpp"

namespace zonec::kernels {

enum class Backend { Serial, OpenMP };

namespace serial {
void apply_1q(std::span<cdouble> state, Qubit q, const DenseMatrix& m);
/// `m` is 4x4 with operand `a` as the high bit of its local index.
void apply_2q(std::span<cdouble> state, Qubit a, Qubit b, const DenseMatrix& m);
}  // namespace serial

namespace omp {
void apply_1q(std::span<cdouble> state, Qubit q, const DenseMatrix& m);
void apply_2q(std::span<cdouble> state, Qubit a, Qubit b, const DenseMatrix& m);
}  // namespace omp

void apply_gate(std::span<cdouble> state, const Gate& gate, Backend backend);

}  // namespace zonec::kernels
