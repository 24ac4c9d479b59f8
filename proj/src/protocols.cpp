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

#include "zonec/protocols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zonec {

namespace {

using std::numbers::pi;

cdouble phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

Unitary4::Unitary4(DenseMatrix m) : m_(std::move(m)) {
  if (m_.dim() != 4) throw std::invalid_argument("Unitary4 requires a 4x4 matrix");
}

Unitary4 rzz_matrix(double gamma) {
  return Unitary4(DenseMatrix::diagonal({1.0, phase(gamma), phase(gamma), 1.0}));
}

Unitary4 lp_matrix(double gamma) {
  return Unitary4(
      DenseMatrix::diagonal({1.0, phase(gamma), phase(gamma), phase(2.0 * gamma + pi)}));
}

Unitary4 cphase_matrix(double phi) {
  return Unitary4(DenseMatrix::diagonal({1.0, 1.0, 1.0, phase(phi)}));
}

Unitary4 adiabatic_matrix(double phi1, double phi2) {
  return Unitary4(DenseMatrix::diagonal({1.0, 1.0, 1.0, phase(phi2 - 2.0 * phi1)}));
}

Unitary4 cz_matrix() { return Unitary4(DenseMatrix::diagonal({1.0, 1.0, 1.0, -1.0})); }

Unitary4 cx_matrix() {
  return Unitary4(DenseMatrix(4, {1, 0, 0, 0,  //
                                  0, 1, 0, 0,  //
                                  0, 0, 0, 1,  //
                                  0, 0, 1, 0}));
}

Unitary4 swap_matrix() {
  return Unitary4(DenseMatrix(4, {1, 0, 0, 0,  //
                                  0, 0, 1, 0,  //
                                  0, 1, 0, 0,  //
                                  0, 0, 0, 1}));
}

std::string_view protocol_name(RzzProtocol p) {
  return p == RzzProtocol::Adiabatic ? "adiabatic" : "cphase";
}

std::array<Gate, 2> RzzRecipe::gates(Qubit a, Qubit b) const {
  if (protocol == RzzProtocol::Cphase) {
    return {make_gate(GateKind::CPHASE, {a, b}, {cphase_phi}),
            make_gate(GateKind::LP, {a, b}, {lp_gamma})};
  }
  return {make_gate(GateKind::AD, {a, b}, {phi1, phi2}),
          make_gate(GateKind::LP, {a, b}, {lp_gamma})};
}

Unitary4 RzzRecipe::composed() const {
  // Diagonal gates commute, so application order only matters for rounding.
  if (protocol == RzzProtocol::Cphase) return lp_matrix(lp_gamma) * cphase_matrix(cphase_phi);
  return adiabatic_matrix(phi1, phi2) * lp_matrix(lp_gamma);
}

RzzRecipe synth_rzz_cphase(double gamma) {
  RzzRecipe r;
  r.protocol = RzzProtocol::Cphase;
  r.lp_gamma = gamma;
  r.cphase_phi = -2.0 * gamma - pi;
  return r;
}

RzzRecipe synth_rzz_adiabatic(double gamma, double phi2) {
  RzzRecipe r;
  r.protocol = RzzProtocol::Adiabatic;
  r.lp_gamma = gamma;
  r.phi2 = phi2;
  r.phi1 = (pi + 2.0 * gamma + phi2) / 2.0;
  return r;
}

RzzRecipe synth_rzz(RzzProtocol protocol, double gamma, double phi2) {
  return protocol == RzzProtocol::Cphase ? synth_rzz_cphase(gamma)
                                         : synth_rzz_adiabatic(gamma, phi2);
}

Unitary4 two_qubit_matrix(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::CX:
      return cx_matrix();
    case GateKind::CZ:
      return cz_matrix();
    case GateKind::SWAP:
      return swap_matrix();
    case GateKind::RZZ:
      return rzz_matrix(gate.params[0]);
    case GateKind::CPHASE:
      return cphase_matrix(gate.params[0]);
    case GateKind::LP:
      return lp_matrix(gate.params[0]);
    case GateKind::AD:
      return adiabatic_matrix(gate.params[0], gate.params[1]);
    default:
      throw std::invalid_argument("two_qubit_matrix: not a two-qubit gate: " +
                                  std::string(gate_name(gate.kind)));
  }
}

DenseMatrix one_qubit_matrix(const Gate& gate) {
  const double s = 1.0 / std::numbers::sqrt2;
  switch (gate.kind) {
    case GateKind::H:
      return DenseMatrix(2, {s, s, s, -s});
    case GateKind::X:
      return DenseMatrix(2, {0, 1, 1, 0});
    case GateKind::RX: {
      double t = gate.params[0] / 2.0;
      return DenseMatrix(2, {std::cos(t), cdouble(0, -std::sin(t)), cdouble(0, -std::sin(t)),
                             std::cos(t)});
    }
    case GateKind::RZ: {
      double t = gate.params[0] / 2.0;
      return DenseMatrix::diagonal({phase(-t), phase(t)});
    }
    default:
      throw std::invalid_argument("one_qubit_matrix: not a single-qubit unitary: " +
                                  std::string(gate_name(gate.kind)));
  }
}

}  // namespace zonec
