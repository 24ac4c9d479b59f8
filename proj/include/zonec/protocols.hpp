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

// Two-qubit Rydberg gate unitaries and the single-qubit-free ZZ rotation
// recipes built from them. All matrices use basis order |00>,|01>,|10>,|11>
// with the first operand as the high bit.

#pragma once

#include <array>

#include "zonec/circuit.hpp"
#include "zonec/matrix.hpp"

namespace zonec {

/// 4x4 unitary. Thin wrapper so signatures say what they carry.
class Unitary4 {
 public:
  Unitary4() : m_(4) {}
  explicit Unitary4(DenseMatrix m);

  const DenseMatrix& matrix() const { return m_; }
  cdouble operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  Unitary4 operator*(const Unitary4& rhs) const { return Unitary4(m_ * rhs.m_); }
  double max_abs_diff(const Unitary4& other) const { return m_.max_abs_diff(other.m_); }

 private:
  DenseMatrix m_;
};

/// diag(1, e^{i g}, e^{i g}, 1)
Unitary4 rzz_matrix(double gamma);
/// diag(1, e^{i g}, e^{i g}, e^{i(2g + pi)})
Unitary4 lp_matrix(double gamma);
/// diag(1, 1, 1, e^{i phi})
Unitary4 cphase_matrix(double phi);
/// diag(1, 1, 1, e^{i(phi2 - 2 phi1)})
Unitary4 adiabatic_matrix(double phi1, double phi2);
Unitary4 cz_matrix();
Unitary4 cx_matrix();
Unitary4 swap_matrix();

enum class RzzProtocol { Adiabatic, Cphase };

std::string_view protocol_name(RzzProtocol p);

/// Two native entangling gates whose product is exactly RZZ(lp_gamma).
struct RzzRecipe {
  RzzProtocol protocol = RzzProtocol::Adiabatic;
  double lp_gamma = 0.0;
  double cphase_phi = 0.0;  // Cphase protocol
  double phi1 = 0.0;        // Adiabatic protocol
  double phi2 = 0.0;

  /// Gates in application order (first gate first) on operands (a, b).
  std::array<Gate, 2> gates(Qubit a, Qubit b) const;
  /// Product of the two gate matrices in application order.
  Unitary4 composed() const;
};

/// phi = -2 gamma - pi cancels the LP phase on |11>.
RzzRecipe synth_rzz_cphase(double gamma);
/// phi1 = (pi + 2 gamma + phi2) / 2.
RzzRecipe synth_rzz_adiabatic(double gamma, double phi2 = 0.0);
RzzRecipe synth_rzz(RzzProtocol protocol, double gamma, double phi2 = 0.0);

/// Matrix for any two-qubit gate kind in the IR.
Unitary4 two_qubit_matrix(const Gate& gate);
/// 2x2 matrix for any single-qubit unitary kind in the IR.
DenseMatrix one_qubit_matrix(const Gate& gate);

}  // namespace zonec
