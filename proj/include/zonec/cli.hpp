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

// Command-line front end. The zonec binary is a thin wrapper over run_cli so
// the commands can be driven from tests.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonec/arch.hpp"
#include "zonec/cost.hpp"
#include "zonec/pipeline.hpp"
#include "zonec/scheduler.hpp"

namespace zonec {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { Human, Json, Csv };

struct RunSpec {
  // Exactly one of the three inputs.
  std::string qasm_path;
  std::string pauli_path;
  std::string bench;
  CompileMode mode = CompileMode::Optimized;
  std::optional<Policy> policy;
  std::string config_path;
  OutputFormat format = OutputFormat::Human;
  std::optional<std::uint64_t> seed;
  bool x_basis = false;
  RzzProtocol protocol = RzzProtocol::Adiabatic;
  double phi2 = 0.0;
  bool gate_based_swap = false;
  std::optional<InitialZone> initial_zone;
  std::vector<std::string> passes;
  bool per_qubit = false;
};

/// Throws UsageError unless exactly one input is set and random families
/// carry a seed.
void check_run_spec(const RunSpec& spec);

Workload load_workload(const RunSpec& spec);
MachineConfig load_machine(const RunSpec& spec);

struct Simulation {
  Workload workload;
  MachineConfig config;
  CompileResult compiled;
  Timeline timeline;
  RunReport report;
};

/// Compile, lay out and schedule. `trace` receives the per-pass dumps.
Simulation run_simulation(const RunSpec& spec, std::ostream* trace = nullptr);

std::string compile_output(const Simulation& sim, OutputFormat format);
std::string simulate_output(const Simulation& sim, OutputFormat format, bool per_qubit = false);

/// 0 ok, 1 usage, 2 input, 3 capacity or routing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zonec
