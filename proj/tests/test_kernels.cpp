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
#include "zonec/kernels.hpp"
#include "zonec/protocols.hpp"

namespace zonec {
namespace {

using kernels::Backend;

std::vector<cdouble> random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  std::vector<cdouble> s(std::size_t{1} << n);
  double norm = 0;
  for (auto& a : s) {
    a = {d(rng), d(rng)};
    norm += std::norm(a);
  }
  for (auto& a : s) a /= std::sqrt(norm);
  return s;
}

double norm2(const std::vector<cdouble>& s) {
  double n = 0;
  for (auto a : s) n += std::norm(a);
  return n;
}

TEST(Kernels, SerialAndOpenMPAgree) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = testing::random_circuit(rng, 11, 40);
    auto a = random_state(rng, 11), b = a;
    for (const Gate& g : c.gates()) {
      kernels::apply_gate(a, g, Backend::Serial);
      kernels::apply_gate(b, g, Backend::OpenMP);
    }
    double diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    EXPECT_LT(diff, 1e-12);
    EXPECT_NEAR(norm2(a), 1.0, 1e-10);
  }
}

TEST(Kernels, FirstOperandIsHighBitOfLocalIndex) {
  // CX(1, 0) on |q1 q0> = |10> flips qubit 0.
  std::vector<cdouble> s(4);
  s[2] = 1.0;
  kernels::apply_gate(s, make_gate(GateKind::CX, {1, 0}), Backend::Serial);
  EXPECT_NEAR(std::abs(s[3]), 1.0, 1e-15);
  // LP phase on |11> only depends on both operands being set.
  std::vector<cdouble> t(8, 0.0);
  t[5] = 1.0;  // q0 = q2 = 1
  kernels::apply_gate(t, make_gate(GateKind::LP, {0, 2}, {0.0}), Backend::OpenMP);
  EXPECT_NEAR(t[5].real(), -1.0, 1e-15);
}

TEST(Kernels, MeasureIsRejected) {
  std::vector<cdouble> s(2, 0.0);
  s[0] = 1;
  EXPECT_THROW(kernels::apply_gate(s, make_gate(GateKind::MEASURE, {0}), Backend::Serial), std::invalid_argument);
}

}  // namespace
}  // namespace zonec
