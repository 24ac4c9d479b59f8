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

// Machine model. Times are in microseconds, lengths in micrometres, and
// coherence constants in seconds.
//
// Geometry: the storage/entangling border runs along y = 0. Storage row r
// sits at y = -r * pitch_storage; entangling row r at
// y = zone_gap + r * pitch_entangling. Columns are centred on x = 0.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zonec/circuit.hpp"

namespace zonec {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Policy { Type1, Type2, Type3 };

std::string_view policy_name(Policy policy);
std::optional<Policy> parse_policy(std::string_view name);

enum class InitialZone { Auto, Storage };

struct MachineConfig {
  double pulse_1q = 0.625;
  double pulse_2q = 0.380;
  double readout_time = 500.0;
  double trap_transfer_time = 150.0;
  double aod_speed = 0.55;
  double zone_gap = 20.0;
  double pitch_entangling = 12.0;
  double pitch_storage = 6.0;
  std::size_t array_rows = 41;
  std::size_t array_cols = 41;
  double coherence_in_storage = 100.0;
  double coherence_out = 4.0;
  double f_1q = 0.999;
  double f_2q = 0.995;
  double f_readout = 0.998;
  double f_transfer = 0.999;
  double x_1q = 0.005;
  double x_cz = 0.007;
  std::size_t physical_per_logical = 14;
  Policy policy = Policy::Type1;
  bool x_basis_allowed = false;
  /// Auto: each qubit starts in the zone of its first gate.
  InitialZone initial_zone = InitialZone::Auto;
  /// Rydberg pair distance when two atoms are brought together.
  double pair_offset = 2.0;
  /// Type 2 isolation radius for single-qubit pulses in the entangling zone.
  double isolation_radius = 12.0;

  double shuttle_unit_time() const { return pitch_entangling / aod_speed; }
  double min_crossing_time() const { return zone_gap / aod_speed; }
  std::size_t zone_sites() const { return array_rows * array_cols; }
  std::size_t logical_capacity() const { return zone_sites() / physical_per_logical; }

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// `key = value` lines, `#` comments. Keys match the MachineConfig fields.
MachineConfig parse_config(std::string_view text, MachineConfig base = {});
MachineConfig load_config_file(const std::string& path, MachineConfig base = {});
std::string dump_config(const MachineConfig& config);

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double distance(Point a, Point b);

enum class Trap { SLM, AOD };

std::string_view trap_name(Trap trap);

struct QubitState {
  Zone zone = Zone::Storage;
  Point pos;
  Trap trap = Trap::AOD;
};

struct Site {
  std::size_t row = 0;
  std::size_t col = 0;

  bool operator==(const Site&) const = default;
  auto operator<=>(const Site&) const = default;
};

class AtomLayout {
 public:
  AtomLayout() = default;
  AtomLayout(const MachineConfig& config, std::size_t n_logical);

  std::size_t num_qubits() const { return states_.size(); }
  const MachineConfig& config() const { return config_; }

  const QubitState& state(Qubit q) const { return states_.at(q); }
  QubitState& state(Qubit q) { return states_.at(q); }

  /// Sites of the 14-site footprint of block `q` in a zone grid.
  std::vector<Site> block_sites(Qubit q) const;
  Point storage_home(Qubit q) const { return storage_home_.at(q); }
  Point entangling_home(Qubit q) const { return entangling_home_.at(q); }
  Point readout_target(Qubit q) const;
  /// Occupied entangling rows (block footprint rows) minus one.
  std::size_t used_rows() const { return used_rows_; }

  /// True if an atom other than those in `ignore` sits within `eps` of `p`.
  bool occupied(Point p, double eps, std::span<const Qubit> ignore = {}) const;

  void place(Qubit q, Zone zone, Point pos) {
    states_.at(q).zone = zone;
    states_.at(q).pos = pos;
  }

 private:
  MachineConfig config_;
  std::vector<QubitState> states_;
  std::vector<Point> storage_home_;
  std::vector<Point> entangling_home_;
  std::size_t used_rows_ = 0;
};

/// Blocks packed row-major from the storage row at the border. Every qubit
/// starts at its storage home in an AOD trap. Throws CapacityError.
AtomLayout build_layout(const MachineConfig& config, std::size_t n_logical);

struct AodMove {
  struct Leg {
    Qubit qubit = 0;
    Point from;
    Point to;
  };
  std::vector<Leg> legs;
};

struct MoveCheck {
  bool ok = true;
  std::string reason;
  Qubit a = 0;
  Qubit b = 0;

  explicit operator bool() const { return ok; }
};

inline constexpr double kOccupancyEps = 1.0;

/// Order preservation within the moving set and destination occupancy
/// against every stationary atom. Throws ConfigError if a leg's qubit is
/// not held by an AOD trap.
MoveCheck validate_move(const AtomLayout& layout, const AodMove& move);
double move_duration(const AodMove& move, const MachineConfig& config);
/// Updates positions; zone is unchanged (callers set it on zone crossings).
void apply_move(AtomLayout& layout, const AodMove& move);

}  // namespace zonec
