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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "zonec/frontend.hpp"
#include "zonec/oracle.hpp"
#include "zonec/rewrite.hpp"

namespace zonec {
namespace {

DenseMatrix from_json(const nlohmann::json& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = {rows[r][c][0], rows[r][c][1]};
  }
  return m;
}

TEST(Oracle, SingleHadamard) {
  Circuit c(1);
  c.append(GateKind::H, {0});
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT(unitary_of(c).max_abs_diff(DenseMatrix(2, {s, s, s, -s})), 1e-15);
}

TEST(Oracle, CxTwiceIsIdentity) {
  Circuit c(2);
  c.append(GateKind::CX, {0, 1}).append(GateKind::CX, {0, 1});
  EXPECT_LT(unitary_of(c).max_abs_diff(DenseMatrix::identity(4)), 1e-15);
}

TEST(Oracle, LittleEndian) {
  Circuit c(3);
  c.append(GateKind::X, {0});
  auto psi = statevector_of(c);
  EXPECT_NEAR(std::abs(psi[1]), 1.0, 1e-15);
  Circuit d(3);
  d.append(GateKind::X, {2});
  EXPECT_NEAR(std::abs(statevector_of(d)[4]), 1.0, 1e-15);
  // Starting basis state is read the same way.
  EXPECT_NEAR(std::abs(statevector_of(Circuit(3), 6)[6]), 1.0, 1e-15);
}

TEST(Oracle, ZzDiagonalByHand) {
  const double th = 0.8;
  Circuit c = synth_pauli_fountain({"ZZ", th});
  DenseMatrix u = unitary_of(c);
  const cdouble m = std::polar(1.0, -th / 2), p = std::polar(1.0, th / 2);
  EXPECT_TRUE(equiv_up_to_global_phase(u, DenseMatrix::diagonal({m, p, p, m}), 1e-12));
}

TEST(Oracle, MatchesFrozenPauliExponentials) {
  for (const auto& t : testing::reference()["pauli_exponentials"]) {
    PauliTerm term{t["label"].get<std::string>(), t["theta"].get<double>()};
    DenseMatrix expected = from_json(t["unitary"]);
    for (bool fountain : {true, false}) {
      Circuit c = fountain ? synth_pauli_fountain(term) : synth_pauli_path(term);
      Circuit wide = c.widened(term.num_qubits());
      EXPECT_TRUE(equiv_up_to_global_phase(unitary_of(wide), expected, 1e-10))
          << term.label << (fountain ? " fountain" : " path");
    }
  }
}

TEST(Oracle, CompositionLaw) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    Circuit a = testing::random_circuit(rng, 4, 15), b = testing::random_circuit(rng, 4, 15);
    Circuit ab = a;
    ab.append_all(b);
    DenseMatrix lhs = unitary_of(ab), rhs = unitary_of(b) * unitary_of(a);
    EXPECT_LT(lhs.max_abs_diff(rhs), 1e-10);
    EXPECT_LT(lhs.unitarity_error(), 1e-9);
  }
}

TEST(Oracle, BackendsAgree) {
  std::mt19937_64 rng(6);
  Circuit c = testing::random_circuit(rng, 6, 50);
  EXPECT_LT(unitary_of(c, kernels::Backend::Serial).max_abs_diff(unitary_of(c, kernels::Backend::OpenMP)), 1e-14);
}

TEST(Oracle, NormPreserved) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto psi = statevector_of(testing::random_circuit(rng, 8, 60), i);
    double n = 0;
    for (auto a : psi) n += std::norm(a);
    EXPECT_NEAR(n, 1.0, 1e-10);
  }
}

TEST(Oracle, GhzStates) {
  for (ChainShape chain : {ChainShape::Path, ChainShape::Fountain, ChainShape::Parallel}) {
    auto psi = statevector_of(gen_ghz(3, chain));
    std::vector<cdouble> ghz(8, 0.0);
    ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
    EXPECT_TRUE(equiv_up_to_global_phase(psi, ghz, 1e-12)) << chain_name(chain);
  }
}

TEST(Oracle, SteaneStabilizers) {
  auto psi = statevector_of(gen_steane_prep());
  const auto& frozen = testing::reference()["steane"];
  for (const std::string& s : steane_stabilizers()) {
    EXPECT_NEAR(pauli_expectation(psi, s), 1.0, 1e-9) << s;
    EXPECT_NEAR(pauli_expectation(psi, s), frozen[s].get<double>(), 1e-12) << s;
  }
  EXPECT_NEAR(pauli_expectation(psi, "ZIIIIII"), 0.0, 1e-9);
}

TEST(Oracle, EmptyCircuitKeepsState) {
  auto psi = statevector_of(Circuit(4), 9);
  for (std::size_t i = 0; i < psi.size(); ++i) EXPECT_EQ(psi[i], i == 9 ? cdouble(1.0) : cdouble(0.0));
}

TEST(Oracle, Guards) {
  EXPECT_THROW(unitary_of(Circuit(kMaxUnitaryQubits + 1)), OracleError);
  EXPECT_THROW(statevector_of(Circuit(kMaxStatevectorQubits + 1)), OracleError);
  Circuit m(1);
  m.append(GateKind::MEASURE, {0});
  EXPECT_THROW(unitary_of(m), OracleError);
  EXPECT_THROW(statevector_of(m), OracleError);
  EXPECT_THROW(statevector_of(Circuit(2), 4), OracleError);
  EXPECT_THROW(pauli_expectation(std::vector<cdouble>(4), "XYZ"), OracleError);
}

}  // namespace
}  // namespace zonec
