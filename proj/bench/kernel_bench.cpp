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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "zonec/circuit.hpp"
#include "zonec/kernels.hpp"
#include "zonec/oracle.hpp"
#include "zonec/protocols.hpp"

namespace {

using zonec::cdouble;
using zonec::kernels::Backend;

std::vector<cdouble> random_state(std::size_t n) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> d;
  std::vector<cdouble> s(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : s) {
    a = {d(rng), d(rng)};
    norm += std::norm(a);
  }
  for (auto& a : s) a /= std::sqrt(norm);
  return s;
}

zonec::Circuit random_circuit(std::size_t n, std::size_t gates) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<zonec::Qubit> pick(0, static_cast<zonec::Qubit>(n - 1));
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  zonec::Circuit c(n);
  for (std::size_t i = 0; i < gates; ++i) {
    zonec::Qubit a = pick(rng), b = pick(rng);
    switch (i % 4) {
      case 0: c.append(zonec::GateKind::H, {a}); break;
      case 1: c.append(zonec::GateKind::RX, {a}, {angle(rng)}); break;
      default:
        if (a == b) b = (a + 1) % n;
        if (i % 4 == 2) {
          c.append(zonec::GateKind::CZ, {a, b});
        } else {
          c.append(zonec::GateKind::RZZ, {a, b}, {angle(rng)});
        }
    }
  }
  return c;
}

template <Backend B>
void BM_apply_1q(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto psi = random_state(n);
  zonec::Gate g = zonec::make_gate(zonec::GateKind::H, {static_cast<zonec::Qubit>(n / 2)});
  for (auto _ : state) {
    zonec::kernels::apply_gate(psi, g, B);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * psi.size() * sizeof(cdouble)));
}

template <Backend B>
void BM_apply_2q(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto psi = random_state(n);
  zonec::Gate g = zonec::make_gate(zonec::GateKind::RZZ, {1, static_cast<zonec::Qubit>(n - 2)}, {0.3});
  for (auto _ : state) {
    zonec::kernels::apply_gate(psi, g, B);
    benchmark::DoNotOptimize(psi.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * psi.size() * sizeof(cdouble)));
}

template <Backend B>
void BM_unitary_of(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  zonec::Circuit c = random_circuit(n, 60);
  for (auto _ : state) {
    zonec::DenseMatrix u = zonec::unitary_of(c, B);
    benchmark::DoNotOptimize(u.data());
  }
}

}  // namespace

BENCHMARK(BM_apply_1q<Backend::Serial>)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(BM_apply_1q<Backend::OpenMP>)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(BM_apply_2q<Backend::Serial>)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(BM_apply_2q<Backend::OpenMP>)->Arg(16)->Arg(20)->Arg(22);
BENCHMARK(BM_unitary_of<Backend::Serial>)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_unitary_of<Backend::OpenMP>)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
