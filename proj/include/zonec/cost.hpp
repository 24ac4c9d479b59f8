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

// Execution-time breakdown and fidelity estimate over a Timeline.

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zonec/arch.hpp"
#include "zonec/circuit.hpp"
#include "zonec/scheduler.hpp"

namespace zonec {

enum class Category { LoadStore, Shuttling, GateExecution, TrapTransfer, Readout, ErrorCorrection };

inline constexpr std::array<Category, 6> kAllCategories = {
    Category::LoadStore, Category::TrapTransfer, Category::Shuttling,
    Category::Readout,   Category::ErrorCorrection, Category::GateExecution};

std::string_view category_name(Category c);
Category category_of(EventKind kind);

/// Wall-clock time per category. Where events of different categories
/// overlap, the instant goes to the one listed first in Category, so a
/// hidden trap transfer only contributes its exposed remainder.
struct Breakdown {
  double load_store = 0.0;
  double trap_transfer = 0.0;
  double shuttling = 0.0;
  double readout = 0.0;
  double error_correction = 0.0;
  double gate_execution = 0.0;
  double makespan = 0.0;

  double& operator[](Category c);
  double operator[](Category c) const;
  double attributed() const;
  /// Category share of the attributed time; 0 when nothing is attributed.
  double share(Category c) const;
};

Breakdown breakdown(const Timeline& timeline);

struct QubitFidelity {
  std::size_t n_1q = 0;
  std::size_t n_2q = 0;
  std::size_t n_transfer = 0;
  bool measured = false;
  double t_in = 0.0;   // us
  double t_out = 0.0;  // us
  double f_1q = 1.0;
  double f_2q = 1.0;
  double f_transfer = 1.0;
  double f_readout = 1.0;
  double f_decoherence = 1.0;
  double f_crosstalk = 1.0;
  double total = 1.0;
};

struct FidelityReport {
  std::vector<QubitFidelity> qubits;
  double total = 1.0;
};

/// Gate counts come from the pulse events (RZ emits none); EC prep is not
/// counted. Type 3 adds (1 - x)^exposures crosstalk factors.
FidelityReport fidelity(const Timeline& timeline, const MachineConfig& config);

struct RunReport {
  std::string workload;
  std::string mode;
  Policy policy = Policy::Type1;
  std::size_t num_qubits = 0;
  GateCounts counts;
  std::size_t physical_gates = 0;
  LdStCount ld_st;
  Breakdown breakdown;
  FidelityReport fidelity;
};

RunReport make_report(std::string workload, std::string mode, const GateCounts& counts,
                      const Timeline& timeline, const MachineConfig& config);

/// Stable key order; per-qubit detail only when `per_qubit` is set.
std::string report_json(const RunReport& r, bool per_qubit = false);
std::string report_human(const RunReport& r);
std::string report_csv_header();
std::string report_csv_row(const RunReport& r);

}  // namespace zonec
