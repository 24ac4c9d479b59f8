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

// Deterministic list scheduler from zone-step programs to timed events.
// One AOD serves all moves, so moves never overlap each other; pulses and
// trap transfers only wait for the qubits they touch.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zonec/arch.hpp"
#include "zonec/circuit.hpp"
#include "zonec/rewrite.hpp"

namespace zonec {

class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EventKind {
  LOAD,
  STORE,
  TRAP_TRANSFER,
  SHUTTLE,
  PULSE_1Q,
  PULSE_2Q,
  READOUT_MOVE,
  READOUT_IMAGE,
  EC_PREP,
};

std::string_view event_name(EventKind kind);

struct Event {
  EventKind kind = EventKind::PULSE_1Q;
  std::vector<Qubit> qubits;
  double start = 0.0;
  double duration = 0.0;
  /// LOAD/STORE/READOUT_MOVE batch id; -1 otherwise.
  int batch = -1;
  /// Gate for pulse events.
  std::optional<GateKind> gate;

  double end() const { return start + duration; }
};

struct Timeline {
  std::size_t num_qubits = 0;
  Policy policy = Policy::Type1;
  std::vector<Event> events;
  /// Per-qubit time inside / outside the storage zone over [0, makespan].
  std::vector<double> t_in;
  std::vector<double> t_out;
  std::vector<bool> measured;
  /// Type 3 global-pulse layers seen by each qubit as a non-target.
  std::vector<std::size_t> crosstalk_1q;
  std::vector<std::size_t> crosstalk_cz;
  double makespan = 0.0;
};

Timeline schedule(const ZoneStepProgram& program, const AtomLayout& layout,
                  const MachineConfig& config);

struct LdStCount {
  std::size_t loads = 0;
  std::size_t stores = 0;

  std::size_t total() const { return loads + stores; }
};

/// Distinct LOAD and STORE batches.
LdStCount count_ld_st(const Timeline& timeline);

struct SwapPlan {
  std::vector<AodMove> legs;
  /// No vacant waypoint; the exchange goes through an SLM handoff.
  bool slm_handoff = false;
};

/// Exchange positions of two entangling-zone qubits via a waypoint.
SwapPlan plan_swap_in_entangling(const AtomLayout& layout, Qubit a, Qubit b);

double ec_prep_duration(const MachineConfig& config);
std::vector<Event> ec_prep_events(const MachineConfig& config, std::size_t n_logical);

/// One tab-separated record per event: kind, qubits, start, duration, batch.
std::string export_timeline(const Timeline& timeline);

/// Throws RoutingError if two events on one qubit overlap in time.
void check_no_overlap(const Timeline& timeline);

}  // namespace zonec
