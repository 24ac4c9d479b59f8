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
#include "zonec/frontend.hpp"

namespace zonec {
namespace {

constexpr const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

ParseError parse_error_of(const std::string& text) {
  try {
    parse_qasm(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return ParseError(0, 0, "");
}

TEST(Qasm, ParsesSupportedSubset) {
  Circuit c = parse_qasm(std::string(kHeader) +
                         "qreg q[3];\ncreg c[3];\nh q[0];\ncx q[0],q[1];\nrz(pi/4) q[2];\n"
                         "rx(-2*pi/3 + 0.5) q[1];\nrzz(0.25) q[1],q[2];\nswap q[0],q[2];\nCX q[2],q[0];\n"
                         "measure q[0] -> c[0];\n");
  ASSERT_EQ(c.num_qubits(), 3u);
  ASSERT_EQ(c.size(), 8u);
  EXPECT_EQ(c[0].kind, GateKind::H);
  EXPECT_EQ(c[1].kind, GateKind::CX);
  EXPECT_NEAR(c[2].params[0], std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(c[3].params[0], -2 * std::numbers::pi / 3 + 0.5, 1e-15);
  EXPECT_EQ(c[4].kind, GateKind::RZZ);
  EXPECT_EQ(c[5].kind, GateKind::SWAP);
  EXPECT_EQ(c[6].kind, GateKind::CX);
  EXPECT_EQ(c[7].kind, GateKind::MEASURE);
}

TEST(Qasm, Broadcast) {
  Circuit c = parse_qasm(std::string(kHeader) + "qreg q[3];\ncreg c[3];\nh q;\nmeasure q -> c;\n");
  GateCounts g = count_gates(c);
  EXPECT_EQ(g.of(GateKind::H), 3u);
  EXPECT_EQ(g.measure, 3u);
}

TEST(Qasm, ErrorsCarryPositions) {
  ParseError e = parse_error_of(std::string(kHeader) + "qreg q[2];\nccx q[0],q[1];\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 1u);
  EXPECT_NE(e.message().find("ccx"), std::string::npos);

  e = parse_error_of(std::string(kHeader) + "qreg q[2];\nh r[0];\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_NE(e.message().find("r"), std::string::npos);

  EXPECT_EQ(parse_error_of("qreg q[2];\n").line(), 1u);
  parse_error_of(std::string(kHeader) + "qreg q[2];\ncx q[0];\n");
  parse_error_of(std::string(kHeader) + "qreg q[2];\nrz q[0];\n");
  parse_error_of(std::string(kHeader) + "qreg q[2];\nh q[5];\n");
  parse_error_of(std::string(kHeader) + "qreg q[2];\ngate foo a { h a; }\n");
  parse_error_of(std::string(kHeader) + "qreg q[2];\ncreg c[2];\nmeasure q[0] -> c[0];\nh q[0];\n");
  parse_error_of(std::string(kHeader) + "qreg q[2];\ncx q[1],q[1];\n");
  parse_error_of(std::string(kHeader) + "qreg q[2];\nh q[0]\n");
  parse_error_of(std::string(kHeader) + "qreg q[2];\nqreg r[2];\n");
}

TEST(Qasm, WhatIncludesLineAndColumn) {
  ParseError e(3, 7, "boom");
  EXPECT_STREQ(e.what(), "3:7: boom");
}

TEST(Qasm, RoundTrip) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    Circuit c = testing::random_circuit(rng, 1 + i % 5, 25);
    EXPECT_EQ(parse_qasm(to_qasm(c)), c);
  }
  Circuit lp(2);
  lp.append(GateKind::LP, {0, 1}, {0.1});
  EXPECT_THROW(to_qasm(lp), CircuitError);
}

TEST(PauliFile, ParseAndDump) {
  PauliTermFile f = parse_pauli_file("# hamiltonian\nqubits 3\nXYZ 0.5\nIIZ -1.25  # weight one\n\n");
  ASSERT_EQ(f.num_qubits, 3u);
  ASSERT_EQ(f.terms.size(), 2u);
  EXPECT_EQ(f.terms[1].label, "IIZ");
  EXPECT_EQ(f.terms[1].theta, -1.25);
  PauliTermFile back = parse_pauli_file(dump_pauli_file(f));
  EXPECT_EQ(back.terms, f.terms);
}

TEST(PauliFile, Errors) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_pauli_file(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("XYZ 0.5\n"), 1u);
  EXPECT_EQ(line_of("qubits 2\nXYZ 0.5\n"), 2u);
  EXPECT_EQ(line_of("qubits 2\nXQ 0.5\n"), 2u);
  EXPECT_EQ(line_of("qubits 2\nXZ abc\n"), 2u);
  EXPECT_EQ(line_of("qubits 0\n"), 1u);
}

TEST(Generators, GhzShapes) {
  Circuit f = gen_ghz(4, ChainShape::Fountain);
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0], make_gate(GateKind::H, {0}));
  for (Qubit i = 1; i < 4; ++i) EXPECT_EQ(f[i], make_gate(GateKind::CX, {0, i}));
  Circuit p = gen_ghz(4, ChainShape::Path);
  for (Qubit i = 1; i < 4; ++i) EXPECT_EQ(p[i], make_gate(GateKind::CX, {i - 1, i}));
  for (std::size_t n : {2u, 5u, 7u, 16u, 33u}) {
    Circuit t = gen_ghz(n, ChainShape::Parallel);
    EXPECT_EQ(count_gates(t).of(GateKind::CX), n - 1);
    // H layer plus a doubling tree.
    EXPECT_EQ(dependency_layers(t).depth(), 1 + static_cast<std::size_t>(std::ceil(std::log2(n))));
  }
  EXPECT_THROW(gen_ghz(1, ChainShape::Path), CircuitError);
}

TEST(Generators, UccIsSeeded) {
  PauliTermFile a = gen_ucc_random(6, 10, 42), b = gen_ucc_random(6, 10, 42), c = gen_ucc_random(6, 10, 43);
  EXPECT_EQ(a.terms, b.terms);
  EXPECT_NE(a.terms, c.terms);
  ASSERT_EQ(a.terms.size(), 10u);
  for (const PauliTerm& t : a.terms) {
    EXPECT_NO_THROW(validate_pauli(t, 6));
    EXPECT_GT(t.theta, 0.0);
    EXPECT_LT(t.theta, 2 * std::numbers::pi);
  }
}

TEST(Generators, PowerLawGraph) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Graph g = power_law_graph(30, seed);
    EXPECT_EQ(g.edges.size(), 3u + 2u * 27u);
    std::set<std::pair<Qubit, Qubit>> seen;
    std::vector<int> degree(30, 0);
    for (const WeightedEdge& e : g.edges) {
      EXPECT_NE(e.a, e.b);
      EXPECT_TRUE(seen.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second);
      ++degree[e.a];
      ++degree[e.b];
    }
    for (int d : degree) EXPECT_GE(d, 2);
  }
  EXPECT_EQ(power_law_graph(30, 5).edges, power_law_graph(30, 5).edges);
}

TEST(Generators, QaoaStructure) {
  Graph g = complete_graph(4);
  EXPECT_EQ(g.edges.size(), 6u);
  Circuit c = gen_qaoa(g, 2, {0.1, 0.2}, {0.3, 0.4});
  GateCounts n = count_gates(c);
  EXPECT_EQ(n.of(GateKind::H), 4u);
  EXPECT_EQ(n.of(GateKind::RZZ), 12u);
  EXPECT_EQ(n.of(GateKind::RX), 8u);
  EXPECT_EQ(n.measure, 4u);
  EXPECT_DOUBLE_EQ(c[4].params[0], 0.1);
  Graph bad = g;
  bad.edges.push_back({1, 1, 1.0});
  EXPECT_THROW(gen_qaoa(bad, 1, {0.1}, {0.1}), CircuitError);
  bad = g;
  bad.edges.push_back({1, 0, 1.0});
  EXPECT_THROW(gen_qaoa(bad, 1, {0.1}, {0.1}), CircuitError);
  EXPECT_THROW(gen_qaoa(g, 2, {0.1}, {0.1}), CircuitError);
}

TEST(Generators, SteanePrep) {
  GateCounts g = count_gates(gen_steane_prep());
  EXPECT_EQ(g.of(GateKind::H), 4u);
  EXPECT_EQ(g.of(GateKind::CX), 9u);
  EXPECT_EQ(steane_stabilizers().size(), 6u);
}

TEST(BenchSpec, Grammar) {
  BenchmarkSpec s = parse_bench_spec("ghz:80:fountain", 0);
  EXPECT_EQ(s.family, BenchFamily::Ghz);
  EXPECT_EQ(s.num_qubits, 80u);
  EXPECT_EQ(s.chain, ChainShape::Fountain);
  s = parse_bench_spec("ucc:15:10", 7);
  EXPECT_EQ(s.num_terms, 10u);
  EXPECT_EQ(s.seed, 7u);
  s = parse_bench_spec("qaoa-sk:8:2", 1);
  EXPECT_EQ(s.family, BenchFamily::QaoaSk);
  EXPECT_EQ(s.layers, 2u);
  EXPECT_EQ(parse_bench_spec("qaoa-pl:8:1", 1).family, BenchFamily::QaoaPl);
  EXPECT_EQ(parse_bench_spec("po:8:1", 1).family, BenchFamily::Po);
  for (const char* bad : {"ghz:80", "ghz:x:path", "ghz:80:spiral", "foo:3:1", "ghz:1:path", "qaoa-sk:8:0"}) {
    EXPECT_THROW(parse_bench_spec(bad, 0), ParseError) << bad;
  }
}

}  // namespace
}  // namespace zonec
