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
#include <numbers>
#include <random>
#include <set>

#include "test_util.hpp"
#include "zonec/circuit.hpp"

namespace zonec {
namespace {

TEST(Circuit, KindTables) {
  for (GateKind k : kAllGateKinds) {
    EXPECT_FALSE(gate_name(k).empty());
    EXPECT_EQ(is_two_qubit(k), gate_arity(k) == 2);
  }
  EXPECT_EQ(gate_zone(GateKind::H), Zone::Storage);
  EXPECT_EQ(gate_zone(GateKind::RZ), Zone::Storage);
  EXPECT_EQ(gate_zone(GateKind::CZ), Zone::Entangling);
  EXPECT_EQ(gate_zone(GateKind::LP), Zone::Entangling);
  EXPECT_EQ(gate_zone(GateKind::MEASURE), Zone::Readout);
  EXPECT_EQ(gate_param_count(GateKind::AD), 2u);
  EXPECT_EQ(gate_param_count(GateKind::CZ), 0u);
}

TEST(Circuit, AppendRejectsBadGates) {
  Circuit c(3);
  EXPECT_THROW(c.append(GateKind::H, {3}), CircuitError);
  EXPECT_THROW(c.append(GateKind::CZ, {1, 1}), CircuitError);
  EXPECT_THROW(c.append(GateKind::CZ, {1}), CircuitError);
  EXPECT_THROW(c.append(GateKind::RZ, {0}), CircuitError);
  EXPECT_THROW(c.append(GateKind::H, {0}, {0.5}), CircuitError);
  EXPECT_THROW(c.append(GateKind::RX, {0}, {std::nan("")}), CircuitError);
  EXPECT_TRUE(c.empty());
  c.append(GateKind::RZZ, {2, 0}, {0.25});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].qubits[0], 2u);
  EXPECT_EQ(c[0].params[0], 0.25);
  EXPECT_TRUE(c[0].touches(0));
  EXPECT_FALSE(c[0].touches(1));
}

TEST(Circuit, WidenedKeepsGates) {
  Circuit c(2);
  c.append(GateKind::CX, {0, 1});
  Circuit w = c.widened(5);
  EXPECT_EQ(w.num_qubits(), 5u);
  EXPECT_EQ(w.gates(), c.gates());
  EXPECT_THROW(w.widened(3), CircuitError);
}

TEST(Circuit, DumpRoundTripsRandomCircuits) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    Circuit c = testing::random_circuit(rng, 1 + trial % 6, 30);
    c.append(GateKind::MEASURE, {0});
    EXPECT_EQ(parse_dump(dump(c)), c);
  }
}

TEST(Circuit, DumpFormat) {
  Circuit c(2);
  c.append(GateKind::H, {0}).append(GateKind::CZ, {0, 1}).append(GateKind::RZ, {1}, {0.5});
  EXPECT_EQ(dump(c), "qubits 2\nH q[0]\nCZ q[0],q[1]\nRZ q[1] (0.5)\n");
  EXPECT_THROW(parse_dump("H q[0]\n"), CircuitError);
  EXPECT_THROW(parse_dump("qubits 1\nFOO q[0]\n"), CircuitError);
}

TEST(Circuit, DependencyLayersRespectOrder) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c = testing::random_circuit(rng, 5, 40);
    DependencyLayers d = dependency_layers(c);
    std::vector<std::size_t> layer_of(c.size());
    std::size_t seen = 0;
    for (std::size_t l = 0; l < d.depth(); ++l) {
      std::set<Qubit> used;
      for (std::size_t i : d.layers[l]) {
        layer_of[i] = l;
        for (Qubit q : c[i].operands()) EXPECT_TRUE(used.insert(q).second);
        ++seen;
      }
    }
    EXPECT_EQ(seen, c.size());
    auto preds = gate_predecessors(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t p : preds[i]) EXPECT_LT(layer_of[p], layer_of[i]);
    }
  }
}

TEST(Circuit, CountGatesSeparatesVirtualRz) {
  Circuit c(2);
  c.append(GateKind::H, {0}).append(GateKind::RZ, {0}, {1.0}).append(GateKind::CZ, {0, 1});
  c.append(GateKind::MEASURE, {0}).append(GateKind::MEASURE, {1});
  GateCounts g = count_gates(c);
  EXPECT_EQ(g.one_qubit, 1u);
  EXPECT_EQ(g.virtual_rz, 1u);
  EXPECT_EQ(g.two_qubit, 1u);
  EXPECT_EQ(g.measure, 2u);
  EXPECT_EQ(g.of(GateKind::CZ), 1u);
  EXPECT_EQ(g.of(GateKind::CX), 0u);
  EXPECT_EQ(g.logical_total(), 3u);
}

TEST(Circuit, PauliTermValidation) {
  PauliTerm t{"IXYZ", 0.3};
  EXPECT_EQ(t.weight(), 3u);
  EXPECT_NO_THROW(validate_pauli(t, 4));
  EXPECT_THROW(validate_pauli(t, 3), CircuitError);
  EXPECT_THROW(validate_pauli({"IXQZ", 0.3}, 4), CircuitError);
  EXPECT_THROW(validate_pauli({"IXYZ", INFINITY}, 4), CircuitError);
}

TEST(Circuit, NormalizeAngle) {
  EXPECT_NEAR(normalize_angle(4 * std::numbers::pi + 0.5), 0.5, 1e-12);
  EXPECT_NEAR(normalize_angle(-0.5), -0.5, 1e-12);
}

}  // namespace
}  // namespace zonec
