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

#include "zonec/cost.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "zonec/pipeline.hpp"

namespace zonec {

namespace {

constexpr std::size_t kNumCategories = 6;

std::string num(double v, const char* f = "%.6f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

std::string_view category_name(Category c) {
  switch (c) {
    case Category::LoadStore: return "load_store";
    case Category::Shuttling: return "shuttling";
    case Category::GateExecution: return "gate_execution";
    case Category::TrapTransfer: return "trap_transfer";
    case Category::Readout: return "readout";
    case Category::ErrorCorrection: return "error_correction";
  }
  return "?";
}

Category category_of(EventKind kind) {
  switch (kind) {
    case EventKind::LOAD:
    case EventKind::STORE:
    case EventKind::READOUT_MOVE: return Category::LoadStore;
    case EventKind::SHUTTLE: return Category::Shuttling;
    case EventKind::PULSE_1Q:
    case EventKind::PULSE_2Q: return Category::GateExecution;
    case EventKind::TRAP_TRANSFER: return Category::TrapTransfer;
    case EventKind::READOUT_IMAGE: return Category::Readout;
    case EventKind::EC_PREP: return Category::ErrorCorrection;
  }
  return Category::GateExecution;
}

double& Breakdown::operator[](Category c) {
  switch (c) {
    case Category::LoadStore: return load_store;
    case Category::Shuttling: return shuttling;
    case Category::GateExecution: return gate_execution;
    case Category::TrapTransfer: return trap_transfer;
    case Category::Readout: return readout;
    case Category::ErrorCorrection: return error_correction;
  }
  return gate_execution;
}

double Breakdown::operator[](Category c) const { return const_cast<Breakdown&>(*this)[c]; }

double Breakdown::attributed() const {
  return load_store + trap_transfer + shuttling + readout + error_correction + gate_execution;
}

double Breakdown::share(Category c) const {
  double a = attributed();
  return a > 0.0 ? (*this)[c] / a : 0.0;
}

Breakdown breakdown(const Timeline& timeline) {
  Breakdown b;
  // (time, +1/-1, category): closings sort before openings at equal times.
  std::vector<std::tuple<double, int, std::size_t>> marks;
  for (const Event& e : timeline.events) {
    b.makespan = std::max(b.makespan, e.end());
    if (e.duration <= 0.0) continue;
    std::size_t c = static_cast<std::size_t>(category_of(e.kind));
    marks.emplace_back(e.start, +1, c);
    marks.emplace_back(e.end(), -1, c);
  }
  std::sort(marks.begin(), marks.end());
  std::array<int, kNumCategories> active{};
  double prev = 0.0;
  for (const auto& [t, delta, c] : marks) {
    for (std::size_t k = 0; k < kNumCategories; ++k) {
      if (active[k] > 0) {
        b[static_cast<Category>(k)] += t - prev;
        break;
      }
    }
    active[c] += delta;
    prev = t;
  }
  return b;
}

FidelityReport fidelity(const Timeline& timeline, const MachineConfig& config) {
  const std::size_t n = timeline.num_qubits;
  FidelityReport r;
  r.qubits.resize(n);
  for (const Event& e : timeline.events) {
    for (Qubit q : e.qubits) {
      QubitFidelity& f = r.qubits.at(q);
      if (e.kind == EventKind::PULSE_1Q && e.gate != GateKind::RZ) ++f.n_1q;
      if (e.kind == EventKind::PULSE_2Q) ++f.n_2q;
      if (e.kind == EventKind::TRAP_TRANSFER) ++f.n_transfer;
    }
  }
  r.total = 1.0;
  for (Qubit q = 0; q < n; ++q) {
    QubitFidelity& f = r.qubits[q];
    f.measured = q < timeline.measured.size() && timeline.measured[q];
    f.t_in = q < timeline.t_in.size() ? timeline.t_in[q] : 0.0;
    f.t_out = q < timeline.t_out.size() ? timeline.t_out[q] : 0.0;
    f.f_1q = std::pow(config.f_1q, static_cast<double>(f.n_1q));
    f.f_2q = std::pow(config.f_2q, static_cast<double>(f.n_2q));
    f.f_transfer = std::pow(config.f_transfer, static_cast<double>(f.n_transfer));
    f.f_readout = f.measured ? config.f_readout : 1.0;
    // Accumulators are in microseconds, coherence constants in seconds.
    f.f_decoherence = std::exp(-(f.t_in * 1e-6 / config.coherence_in_storage +
                                 f.t_out * 1e-6 / config.coherence_out));
    if (timeline.policy == Policy::Type3) {
      std::size_t x1 = q < timeline.crosstalk_1q.size() ? timeline.crosstalk_1q[q] : 0;
      std::size_t x2 = q < timeline.crosstalk_cz.size() ? timeline.crosstalk_cz[q] : 0;
      f.f_crosstalk = std::pow(1.0 - config.x_1q, static_cast<double>(x1)) *
                      std::pow(1.0 - config.x_cz, static_cast<double>(x2));
    }
    f.total = f.f_1q * f.f_2q * f.f_transfer * f.f_readout * f.f_decoherence * f.f_crosstalk;
    r.total *= f.total;
  }
  return r;
}

RunReport make_report(std::string workload, std::string mode, const GateCounts& counts,
                      const Timeline& timeline, const MachineConfig& config) {
  RunReport r;
  r.workload = std::move(workload);
  r.mode = std::move(mode);
  r.policy = timeline.policy;
  r.num_qubits = timeline.num_qubits;
  r.counts = counts;
  r.physical_gates = physical_gate_count(counts);
  r.ld_st = count_ld_st(timeline);
  r.breakdown = breakdown(timeline);
  r.fidelity = fidelity(timeline, config);
  return r;
}

std::string report_json(const RunReport& r, bool per_qubit) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["workload"] = r.workload;
  j["mode"] = r.mode;
  j["policy"] = std::string(policy_name(r.policy));
  j["num_qubits"] = r.num_qubits;
  j["gates"] = {{"one_qubit", r.counts.one_qubit},
                {"two_qubit", r.counts.two_qubit},
                {"virtual_rz", r.counts.virtual_rz},
                {"measure", r.counts.measure},
                {"physical", r.physical_gates}};
  j["ld_st"] = {{"loads", r.ld_st.loads}, {"stores", r.ld_st.stores}, {"total", r.ld_st.total()}};
  ordered_json times, shares;
  for (Category c : kAllCategories) {
    times[std::string(category_name(c))] = r.breakdown[c];
    shares[std::string(category_name(c))] = r.breakdown.share(c);
  }
  times["makespan"] = r.breakdown.makespan;
  j["time_us"] = times;
  j["shares"] = shares;
  ordered_json fid;
  fid["total"] = r.fidelity.total;
  if (per_qubit) {
    ordered_json qs = ordered_json::array();
    for (const QubitFidelity& f : r.fidelity.qubits) {
      qs.push_back({{"n_1q", f.n_1q},
                    {"n_2q", f.n_2q},
                    {"n_transfer", f.n_transfer},
                    {"measured", f.measured},
                    {"t_in_us", f.t_in},
                    {"t_out_us", f.t_out},
                    {"f_1q", f.f_1q},
                    {"f_2q", f.f_2q},
                    {"f_transfer", f.f_transfer},
                    {"f_readout", f.f_readout},
                    {"f_decoherence", f.f_decoherence},
                    {"f_crosstalk", f.f_crosstalk},
                    {"total", f.total}});
    }
    fid["qubits"] = qs;
  }
  j["fidelity"] = fid;
  return j.dump(2) + "\n";
}

std::string report_human(const RunReport& r) {
  std::ostringstream os;
  os << r.workload << " [" << r.mode << ", " << policy_name(r.policy) << "] " << r.num_qubits
     << " logical qubits\n";
  os << "  gates: 1q " << r.counts.one_qubit << ", 2q " << r.counts.two_qubit << ", rz "
     << r.counts.virtual_rz << ", physical " << r.physical_gates << "\n";
  os << "  ld/st: " << r.ld_st.total() << " (" << r.ld_st.loads << " load, " << r.ld_st.stores
     << " store)\n";
  os << "  makespan: " << num(r.breakdown.makespan, "%.3f") << " us\n";
  for (Category c : kAllCategories) {
    os << "    " << category_name(c) << ": " << num(r.breakdown[c], "%.3f") << " us ("
       << num(100.0 * r.breakdown.share(c), "%.1f") << "%)\n";
  }
  os << "  fidelity: " << num(r.fidelity.total, "%.6g") << "\n";
  return os.str();
}

std::string report_csv_header() {
  std::string h = "workload,mode,policy,num_qubits,one_qubit,two_qubit,physical,loads,stores,ld_st,makespan";
  for (Category c : kAllCategories) h += "," + std::string(category_name(c));
  h += ",fidelity";
  return h;
}

std::string report_csv_row(const RunReport& r) {
  std::string row = r.workload + "," + r.mode + "," + std::string(policy_name(r.policy)) + "," +
                    std::to_string(r.num_qubits) + "," + std::to_string(r.counts.one_qubit) + "," +
                    std::to_string(r.counts.two_qubit) + "," + std::to_string(r.physical_gates) + "," +
                    std::to_string(r.ld_st.loads) + "," + std::to_string(r.ld_st.stores) + "," +
                    std::to_string(r.ld_st.total()) + "," + num(r.breakdown.makespan);
  for (Category c : kAllCategories) row += "," + num(r.breakdown[c]);
  row += "," + num(r.fidelity.total, "%.9g");
  return row;
}

}  // namespace zonec
