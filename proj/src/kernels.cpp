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

#include "zonec/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "zonec/protocols.hpp"

namespace zonec::kernels {

namespace {

inline std::uint64_t insert_zero(std::uint64_t k, unsigned bit) {
  std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

inline void mix2(std::span<cdouble> s, std::uint64_t i0, std::uint64_t i1, const DenseMatrix& m) {
  cdouble a = s[i0], b = s[i1];
  s[i0] = m(0, 0) * a + m(0, 1) * b;
  s[i1] = m(1, 0) * a + m(1, 1) * b;
}

inline void mix4(std::span<cdouble> s, const std::uint64_t (&idx)[4], const DenseMatrix& m) {
  cdouble v[4] = {s[idx[0]], s[idx[1]], s[idx[2]], s[idx[3]]};
  for (int r = 0; r < 4; ++r) {
    s[idx[r]] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2] + m(r, 3) * v[3];
  }
}

inline void indices4(std::uint64_t k, unsigned lo, unsigned hi, std::uint64_t ma, std::uint64_t mb,
                     std::uint64_t (&idx)[4]) {
  std::uint64_t base = insert_zero(insert_zero(k, lo), hi);
  idx[0] = base;
  idx[1] = base | mb;
  idx[2] = base | ma;
  idx[3] = base | ma | mb;
}

void check_size(std::span<cdouble> state, std::initializer_list<Qubit> qubits) {
  for (Qubit q : qubits) {
    if ((std::uint64_t{1} << q) >= state.size()) throw std::out_of_range("kernel qubit out of range");
  }
}

}  // namespace

namespace serial {

void apply_1q(std::span<cdouble> state, Qubit q, const DenseMatrix& m) {
  check_size(state, {q});
  const std::uint64_t half = state.size() / 2;
  const std::uint64_t mask = std::uint64_t{1} << q;
  for (std::uint64_t k = 0; k < half; ++k) {
    std::uint64_t i0 = insert_zero(k, q);
    mix2(state, i0, i0 | mask, m);
  }
}

void apply_2q(std::span<cdouble> state, Qubit a, Qubit b, const DenseMatrix& m) {
  check_size(state, {a, b});
  const unsigned lo = std::min(a, b), hi = std::max(a, b);
  const std::uint64_t ma = std::uint64_t{1} << a, mb = std::uint64_t{1} << b;
  const std::uint64_t quarter = state.size() / 4;
  std::uint64_t idx[4];
  for (std::uint64_t k = 0; k < quarter; ++k) {
    indices4(k, lo, hi, ma, mb, idx);
    mix4(state, idx, m);
  }
}

}  // namespace serial

namespace omp {

void apply_1q(std::span<cdouble> state, Qubit q, const DenseMatrix& m) {
  check_size(state, {q});
  const std::int64_t half = static_cast<std::int64_t>(state.size() / 2);
  const std::uint64_t mask = std::uint64_t{1} << q;
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < half; ++k) {
    std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(k), q);
    mix2(state, i0, i0 | mask, m);
  }
}

void apply_2q(std::span<cdouble> state, Qubit a, Qubit b, const DenseMatrix& m) {
  check_size(state, {a, b});
  const unsigned lo = std::min(a, b), hi = std::max(a, b);
  const std::uint64_t ma = std::uint64_t{1} << a, mb = std::uint64_t{1} << b;
  const std::int64_t quarter = static_cast<std::int64_t>(state.size() / 4);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < quarter; ++k) {
    std::uint64_t idx[4];
    indices4(static_cast<std::uint64_t>(k), lo, hi, ma, mb, idx);
    mix4(state, idx, m);
  }
}

}  // namespace omp

void apply_gate(std::span<cdouble> state, const Gate& gate, Backend backend) {
  if (gate.kind == GateKind::MEASURE) throw std::invalid_argument("cannot apply MEASURE as a unitary");
  if (gate.arity() == 1) {
    DenseMatrix m = one_qubit_matrix(gate);
    if (backend == Backend::OpenMP) {
      omp::apply_1q(state, gate.qubits[0], m);
    } else {
      serial::apply_1q(state, gate.qubits[0], m);
    }
    return;
  }
  const Unitary4 u = two_qubit_matrix(gate);
  const DenseMatrix& m = u.matrix();
  if (backend == Backend::OpenMP) {
    omp::apply_2q(state, gate.qubits[0], gate.qubits[1], m);
  } else {
    serial::apply_2q(state, gate.qubits[0], gate.qubits[1], m);
  }
}

}  // namespace zonec::kernels
