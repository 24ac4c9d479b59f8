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

#include "zonec/arch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace zonec {

namespace {

constexpr double kOrderEps = 1e-9;

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double to_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  double d = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || !std::isfinite(d)) {
    throw ConfigError("config: bad number for " + key + ": '" + v + "'");
  }
  return d;
}

std::size_t to_count(const std::string& key, const std::string& v) {
  if (v.empty() || v.size() > 9 || v.find_first_not_of("0123456789") != std::string::npos) {
    throw ConfigError("config: bad count for " + key + ": '" + v + "'");
  }
  return std::stoul(v);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: bad boolean for " + key + ": '" + v + "'");
}

struct Field {
  std::function<void(MachineConfig&, const std::string&)> set;
  std::function<std::string(const MachineConfig&)> get;
};

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> t;
    auto num = [&](const char* k, double MachineConfig::*m) {
      t[k] = {[m, k](MachineConfig& c, const std::string& v) { c.*m = to_double(k, v); },
              [m](const MachineConfig& c) { return fmt(c.*m); }};
    };
    auto count = [&](const char* k, std::size_t MachineConfig::*m) {
      t[k] = {[m, k](MachineConfig& c, const std::string& v) { c.*m = to_count(k, v); },
              [m](const MachineConfig& c) { return std::to_string(c.*m); }};
    };
    num("pulse_1q", &MachineConfig::pulse_1q);
    num("pulse_2q", &MachineConfig::pulse_2q);
    num("readout_time", &MachineConfig::readout_time);
    num("trap_transfer_time", &MachineConfig::trap_transfer_time);
    num("aod_speed", &MachineConfig::aod_speed);
    num("zone_gap", &MachineConfig::zone_gap);
    num("pitch_entangling", &MachineConfig::pitch_entangling);
    num("pitch_storage", &MachineConfig::pitch_storage);
    count("array_rows", &MachineConfig::array_rows);
    count("array_cols", &MachineConfig::array_cols);
    num("coherence_in_storage", &MachineConfig::coherence_in_storage);
    num("coherence_out", &MachineConfig::coherence_out);
    num("f_1q", &MachineConfig::f_1q);
    num("f_2q", &MachineConfig::f_2q);
    num("f_readout", &MachineConfig::f_readout);
    num("f_transfer", &MachineConfig::f_transfer);
    num("x_1q", &MachineConfig::x_1q);
    num("x_cz", &MachineConfig::x_cz);
    count("physical_per_logical", &MachineConfig::physical_per_logical);
    num("pair_offset", &MachineConfig::pair_offset);
    num("isolation_radius", &MachineConfig::isolation_radius);
    t["policy"] = {[](MachineConfig& c, const std::string& v) {
                     auto p = parse_policy(v);
                     if (!p) throw ConfigError("config: unknown policy '" + v + "'");
                     c.policy = *p;
                   },
                   [](const MachineConfig& c) { return std::string(policy_name(c.policy)); }};
    t["x_basis_allowed"] = {
        [](MachineConfig& c, const std::string& v) { c.x_basis_allowed = to_bool("x_basis_allowed", v); },
        [](const MachineConfig& c) { return std::string(c.x_basis_allowed ? "true" : "false"); }};
    t["initial_zone"] = {
        [](MachineConfig& c, const std::string& v) {
          if (v == "auto") {
            c.initial_zone = InitialZone::Auto;
          } else if (v == "storage") {
            c.initial_zone = InitialZone::Storage;
          } else {
            throw ConfigError("config: initial_zone must be auto or storage, got '" + v + "'");
          }
        },
        [](const MachineConfig& c) {
          return std::string(c.initial_zone == InitialZone::Auto ? "auto" : "storage");
        }};
    return t;
  }();
  return table;
}

void positive(double v, const char* name) {
  if (!(v > 0.0)) throw ConfigError(std::string("config: ") + name + " must be positive");
}

void fidelity(double v, const char* name) {
  if (!(v > 0.0 && v <= 1.0)) throw ConfigError(std::string("config: ") + name + " must be in (0, 1]");
}

void crosstalk(double v, const char* name) {
  if (!(v >= 0.0 && v < 1.0)) throw ConfigError(std::string("config: ") + name + " must be in [0, 1)");
}

Point centroid(const std::vector<Site>& sites, double pitch, std::size_t cols,
               const std::function<double(double)>& row_to_y) {
  double sx = 0.0, sr = 0.0;
  for (const Site& s : sites) {
    sx += (static_cast<double>(s.col) - 0.5 * static_cast<double>(cols - 1)) * pitch;
    sr += static_cast<double>(s.row);
  }
  double k = static_cast<double>(sites.size());
  return {sx / k, row_to_y(sr / k)};
}

}  // namespace

std::string_view policy_name(Policy policy) {
  switch (policy) {
    case Policy::Type1: return "type1";
    case Policy::Type2: return "type2";
    case Policy::Type3: return "type3";
  }
  return "type1";
}

std::optional<Policy> parse_policy(std::string_view name) {
  if (name == "type1") return Policy::Type1;
  if (name == "type2") return Policy::Type2;
  if (name == "type3") return Policy::Type3;
  return std::nullopt;
}

void MachineConfig::validate() const {
  positive(pulse_1q, "pulse_1q");
  positive(pulse_2q, "pulse_2q");
  positive(readout_time, "readout_time");
  positive(trap_transfer_time, "trap_transfer_time");
  positive(aod_speed, "aod_speed");
  positive(zone_gap, "zone_gap");
  positive(pitch_entangling, "pitch_entangling");
  positive(pitch_storage, "pitch_storage");
  positive(coherence_in_storage, "coherence_in_storage");
  positive(coherence_out, "coherence_out");
  positive(pair_offset, "pair_offset");
  positive(isolation_radius, "isolation_radius");
  if (array_rows == 0 || array_cols == 0) throw ConfigError("config: array must be non-empty");
  if (physical_per_logical == 0) throw ConfigError("config: physical_per_logical must be positive");
  if (physical_per_logical > zone_sites()) throw ConfigError("config: logical block exceeds zone size");
  fidelity(f_1q, "f_1q");
  fidelity(f_2q, "f_2q");
  fidelity(f_readout, "f_readout");
  fidelity(f_transfer, "f_transfer");
  crosstalk(x_1q, "x_1q");
  crosstalk(x_cz, "x_cz");
  if (pair_offset <= kOccupancyEps) throw ConfigError("config: pair_offset must exceed 1 um");
}

MachineConfig parse_config(std::string_view text, MachineConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    auto it = fields().find(key);
    if (it == fields().end()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    try {
      it->second.set(base, value);
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  base.validate();
  return base;
}

MachineConfig load_config_file(const std::string& path, MachineConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

std::string dump_config(const MachineConfig& config) {
  std::string out;
  for (const auto& [key, field] : fields()) out += key + " = " + field.get(config) + "\n";
  return out;
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::string_view trap_name(Trap trap) { return trap == Trap::SLM ? "SLM" : "AOD"; }

AtomLayout::AtomLayout(const MachineConfig& config, std::size_t n_logical) : config_(config) {
  config_.validate();
  const std::size_t cap = config_.logical_capacity();
  if (n_logical > cap) {
    throw CapacityError("layout: " + std::to_string(n_logical) +
                        " logical qubits exceed zone capacity of " + std::to_string(cap));
  }
  states_.resize(n_logical);
  std::size_t last_row = 0;
  for (Qubit q = 0; q < n_logical; ++q) {
    for (const Site& s : block_sites(q)) last_row = std::max(last_row, s.row);
  }
  used_rows_ = last_row;
  const double ps = config_.pitch_storage, pe = config_.pitch_entangling;
  const double gap = config_.zone_gap;
  const double u = static_cast<double>(used_rows_);
  for (Qubit q = 0; q < n_logical; ++q) {
    auto sites = block_sites(q);
    storage_home_.push_back(centroid(sites, ps, config_.array_cols, [&](double r) { return -r * ps; }));
    // Mirrored rows keep storage<->entangling maps order preserving.
    entangling_home_.push_back(
        centroid(sites, pe, config_.array_cols, [&](double r) { return gap + (u - r) * pe; }));
    states_[q] = {Zone::Storage, storage_home_.back(), Trap::AOD};
  }
}

std::vector<Site> AtomLayout::block_sites(Qubit q) const {
  std::vector<Site> sites;
  const std::size_t k = config_.physical_per_logical;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t s = static_cast<std::size_t>(q) * k + i;
    sites.push_back({s / config_.array_cols, s % config_.array_cols});
  }
  return sites;
}

Point AtomLayout::readout_target(Qubit q) const {
  const double far = config_.zone_gap + static_cast<double>(used_rows_) * config_.pitch_entangling;
  return {entangling_home_.at(q).x, far + config_.zone_gap};
}

bool AtomLayout::occupied(Point p, double eps, std::span<const Qubit> ignore) const {
  for (Qubit q = 0; q < states_.size(); ++q) {
    if (std::find(ignore.begin(), ignore.end(), q) != ignore.end()) continue;
    if (states_[q].zone == Zone::Readout) continue;
    if (distance(states_[q].pos, p) < eps) return true;
  }
  return false;
}

AtomLayout build_layout(const MachineConfig& config, std::size_t n_logical) {
  return AtomLayout(config, n_logical);
}

MoveCheck validate_move(const AtomLayout& layout, const AodMove& move) {
  std::vector<Qubit> movers;
  for (const auto& leg : move.legs) {
    if (leg.qubit >= layout.num_qubits()) throw ConfigError("move: qubit out of range");
    if (layout.state(leg.qubit).trap != Trap::AOD) {
      throw ConfigError("move: qubit " + std::to_string(leg.qubit) + " is not in an AOD trap");
    }
    if (std::find(movers.begin(), movers.end(), leg.qubit) != movers.end()) {
      throw ConfigError("move: qubit " + std::to_string(leg.qubit) + " appears twice");
    }
    movers.push_back(leg.qubit);
  }
  auto inverted = [](double a0, double b0, double a1, double b1) {
    double d0 = a0 - b0, d1 = a1 - b1;
    return (d0 > kOrderEps && d1 < -kOrderEps) || (d0 < -kOrderEps && d1 > kOrderEps);
  };
  const auto& legs = move.legs;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    for (std::size_t j = i + 1; j < legs.size(); ++j) {
      const auto &p = legs[i], &r = legs[j];
      if (inverted(p.from.x, r.from.x, p.to.x, r.to.x)) {
        return {false, "column order inverted", p.qubit, r.qubit};
      }
      if (inverted(p.from.y, r.from.y, p.to.y, r.to.y)) {
        return {false, "row order inverted", p.qubit, r.qubit};
      }
      if (distance(p.to, r.to) < kOccupancyEps) {
        return {false, "destinations coincide", p.qubit, r.qubit};
      }
    }
  }
  for (const auto& leg : legs) {
    for (Qubit q = 0; q < layout.num_qubits(); ++q) {
      if (std::find(movers.begin(), movers.end(), q) != movers.end()) continue;
      const QubitState& s = layout.state(q);
      if (s.zone == Zone::Readout) continue;
      if (distance(s.pos, leg.to) < kOccupancyEps) {
        return {false, "destination occupied", leg.qubit, q};
      }
    }
  }
  return {};
}

double move_duration(const AodMove& move, const MachineConfig& config) {
  double longest = 0.0;
  for (const auto& leg : move.legs) longest = std::max(longest, distance(leg.from, leg.to));
  return longest / config.aod_speed;
}

void apply_move(AtomLayout& layout, const AodMove& move) {
  for (const auto& leg : move.legs) layout.state(leg.qubit).pos = leg.to;
}

}  // namespace zonec
