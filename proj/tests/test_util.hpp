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

// Shared helpers for the unit tests.

#pragma once

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "zonec/circuit.hpp"
#include "zonec/frontend.hpp"

namespace zonec::testing {

inline std::string golden_path(const std::string& name) { return std::string(ZONEC_GOLDEN_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Compares against tests/golden/<name>. ZONEC_UPDATE_GOLDEN=1 rewrites it.
inline void expect_golden(const std::string& name, const std::string& actual) {
  const std::string path = golden_path(name);
  if (const char* env = std::getenv("ZONEC_UPDATE_GOLDEN"); env && std::string(env) == "1") {
    std::ofstream(path, std::ios::binary) << actual;
  }
  std::ifstream probe(path);
  ASSERT_TRUE(probe.good()) << "missing golden file " << path;
  EXPECT_EQ(read_text(path), actual) << "golden mismatch: " << name;
}

inline const nlohmann::json& reference() {
  static const nlohmann::json j = nlohmann::json::parse(read_text(golden_path("reference.json")));
  return j;
}

/// Random unitary circuit over the IR kinds the passes accept as input.
inline Circuit random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t gates, bool with_swap = true) {
  std::uniform_int_distribution<Qubit> pick(0, static_cast<Qubit>(n - 1));
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  std::uniform_int_distribution<int> kind(0, with_swap ? 8 : 7);
  Circuit c(n);
  for (std::size_t i = 0; i < gates; ++i) {
    Qubit a = pick(rng), b = pick(rng);
    if (n > 1) {
      while (b == a) b = pick(rng);
    }
    int k = n > 1 ? kind(rng) : kind(rng) % 4;
    switch (k) {
      case 0: c.append(GateKind::H, {a}); break;
      case 1: c.append(GateKind::X, {a}); break;
      case 2: c.append(GateKind::RX, {a}, {angle(rng)}); break;
      case 3: c.append(GateKind::RZ, {a}, {angle(rng)}); break;
      case 4: c.append(GateKind::CX, {a, b}); break;
      case 5: c.append(GateKind::CZ, {a, b}); break;
      case 6: c.append(GateKind::RZZ, {a, b}, {angle(rng)}); break;
      case 7: c.append(GateKind::CX, {b, a}); break;
      default: c.append(GateKind::SWAP, {a, b}); break;
    }
  }
  return c;
}

inline PauliTerm random_term(std::mt19937_64& rng, std::size_t n) {
  static const char kLetters[] = "IXYZ";
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_real_distribution<double> angle(-3.2, 3.2);
  PauliTerm t;
  for (std::size_t i = 0; i < n; ++i) t.label += kLetters[letter(rng)];
  t.theta = angle(rng);
  return t;
}

}  // namespace zonec::testing
