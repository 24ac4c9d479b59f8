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

#include "zonec/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zonec/frontend.hpp"

namespace zonec {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

const char* kBenchHelp =
    "Benchmark spec: ghz:N:path|fountain|parallel, ucc:N:TERMS, qaoa-sk:N:P, qaoa-pl:N:P, po:N:P";

// Option values as typed, so sweeps can substitute {key} placeholders
// before interpretation.
struct RawOptions {
  std::string qasm, pauli, bench, mode = "mantra", policy, config, format = "human", seed, protocol = "adiabatic",
                              initial_zone, passes, timeline;
  double phi2 = 0.0;
  bool x_basis = false, gate_swap = false, per_qubit = false, trace = false;
};

RawOptions substitute(RawOptions raw, const std::map<std::string, std::string>& values) {
  auto sub = [&](std::string& s) {
    for (const auto& [k, v] : values) {
      const std::string token = "{" + k + "}";
      for (std::size_t pos = s.find(token); pos != std::string::npos; pos = s.find(token, pos + v.size())) {
        s.replace(pos, token.size(), v);
      }
    }
  };
  for (std::string* s : {&raw.qasm, &raw.pauli, &raw.bench, &raw.mode, &raw.policy, &raw.config,
                         &raw.seed, &raw.protocol, &raw.initial_zone, &raw.passes}) {
    sub(*s);
  }
  return raw;
}

RawOptions untemplated(RawOptions raw) {
  const RawOptions defaults;
  auto reset = [](std::string& s, const std::string& d) {
    if (s.find('{') != std::string::npos) s = d;
  };
  reset(raw.mode, defaults.mode);
  reset(raw.policy, defaults.policy);
  reset(raw.format, defaults.format);
  reset(raw.seed, defaults.seed);
  reset(raw.protocol, defaults.protocol);
  reset(raw.initial_zone, defaults.initial_zone);
  return raw;
}

RunSpec to_spec(const RawOptions& raw) {
  RunSpec s;
  s.qasm_path = raw.qasm;
  s.pauli_path = raw.pauli;
  s.bench = raw.bench;
  if (raw.mode == "standard") {
    s.mode = CompileMode::Standard;
  } else if (raw.mode == "mantra") {
    s.mode = CompileMode::Optimized;
  } else {
    throw UsageError("--mode must be standard or mantra, got '" + raw.mode + "'");
  }
  if (!raw.policy.empty()) {
    s.policy = parse_policy(raw.policy);
    if (!s.policy) throw UsageError("--policy must be type1, type2 or type3, got '" + raw.policy + "'");
  }
  s.config_path = raw.config;
  if (raw.format == "human") {
    s.format = OutputFormat::Human;
  } else if (raw.format == "json") {
    s.format = OutputFormat::Json;
  } else if (raw.format == "csv") {
    s.format = OutputFormat::Csv;
  } else {
    throw UsageError("--format must be human, json or csv");
  }
  if (!raw.seed.empty()) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw.seed.c_str(), &end, 10);
    if (*end != '\0' || raw.seed[0] == '-') throw UsageError("--seed must be a non-negative integer");
    s.seed = v;
  }
  if (raw.protocol == "adiabatic") {
    s.protocol = RzzProtocol::Adiabatic;
  } else if (raw.protocol == "cphase") {
    s.protocol = RzzProtocol::Cphase;
  } else {
    throw UsageError("--protocol must be adiabatic or cphase");
  }
  s.phi2 = raw.phi2;
  if (raw.initial_zone == "auto") {
    s.initial_zone = InitialZone::Auto;
  } else if (raw.initial_zone == "storage") {
    s.initial_zone = InitialZone::Storage;
  } else if (!raw.initial_zone.empty()) {
    throw UsageError("--initial-zone must be auto or storage");
  }
  s.passes = split(raw.passes, ',');
  s.x_basis = raw.x_basis;
  s.gate_based_swap = raw.gate_swap;
  s.per_qubit = raw.per_qubit;
  return s;
}

void add_common(CLI::App* cmd, RawOptions& o) {
  auto* qasm = cmd->add_option("--qasm", o.qasm, "OpenQASM 2.0 input file");
  auto* pauli = cmd->add_option("--pauli", o.pauli, "Pauli-term input file");
  auto* bench = cmd->add_option("--bench", o.bench, kBenchHelp);
  qasm->excludes(pauli)->excludes(bench);
  pauli->excludes(bench);
  cmd->add_option("--mode", o.mode, "standard or mantra")->capture_default_str();
  cmd->add_option("--policy", o.policy, "type1, type2 or type3 (default: from config)");
  cmd->add_option("--config", o.config, "machine config file (default: $ZONEC_CONFIG)");
  cmd->add_option("--format", o.format, "human, json or csv")->capture_default_str();
  cmd->add_option("--seed", o.seed, "seed for random benchmark families");
  cmd->add_flag("--x-basis", o.x_basis, "allow X-basis preparation and measurement");
  cmd->add_option("--protocol", o.protocol, "adiabatic or cphase")->capture_default_str();
  cmd->add_option("--phi2", o.phi2, "free phase of the adiabatic protocol");
  cmd->add_flag("--gate-swap", o.gate_swap, "lower SWAP to gates instead of atom moves");
  cmd->add_option("--initial-zone", o.initial_zone, "auto or storage");
  cmd->add_option("--passes", o.passes, "comma-separated pass list overriding the mode default");
  cmd->add_flag("--trace", o.trace, "dump the circuit after every pass to stderr");
}

std::string program_json(const Simulation& sim) {
  nlohmann::ordered_json j;
  j["workload"] = sim.workload.label;
  j["mode"] = sim.report.mode;
  j["passes"] = sim.compiled.passes;
  j["program"] = split(dump(sim.compiled.program), '\n');
  j["boundary_crossings"] = sim.compiled.program.boundary_crossings();
  const GateCounts& c = sim.compiled.counts;
  j["gates"] = {{"one_qubit", c.one_qubit},
                {"two_qubit", c.two_qubit},
                {"virtual_rz", c.virtual_rz},
                {"measure", c.measure},
                {"physical", physical_gate_count(c)}};
  j["ld_st"] = {{"loads", sim.report.ld_st.loads},
                {"stores", sim.report.ld_st.stores},
                {"total", sim.report.ld_st.total()}};
  return j.dump(2) + "\n";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return 1;
  if (dynamic_cast<const CapacityError*>(&e) || dynamic_cast<const RoutingError*>(&e)) return 3;
  return 2;
}

}  // namespace

void check_run_spec(const RunSpec& spec) {
  int inputs = !spec.qasm_path.empty() + !spec.pauli_path.empty() + !spec.bench.empty();
  if (inputs != 1) throw UsageError("exactly one of --qasm, --pauli or --bench is required");
  if (!spec.bench.empty() && spec.bench.rfind("ghz:", 0) != 0 && !spec.seed) {
    throw UsageError("--seed is required for random benchmark families");
  }
}

Workload load_workload(const RunSpec& spec) {
  check_run_spec(spec);
  if (!spec.qasm_path.empty()) {
    return workload_from_circuit(parse_qasm(read_file(spec.qasm_path)), spec.qasm_path);
  }
  if (!spec.pauli_path.empty()) {
    return workload_from_terms(parse_pauli_file(read_file(spec.pauli_path)), spec.pauli_path);
  }
  Workload w = build_bench(parse_bench_spec(spec.bench, spec.seed.value_or(0)));
  w.label = spec.bench;
  return w;
}

MachineConfig load_machine(const RunSpec& spec) {
  MachineConfig c;
  if (!spec.config_path.empty()) c = load_config_file(spec.config_path);
  if (spec.policy) c.policy = *spec.policy;
  if (spec.initial_zone) c.initial_zone = *spec.initial_zone;
  if (spec.x_basis) c.x_basis_allowed = true;
  c.validate();
  return c;
}

Simulation run_simulation(const RunSpec& spec, std::ostream* trace) {
  Simulation sim;
  sim.workload = load_workload(spec);
  sim.config = load_machine(spec);
  PipelineOptions o;
  o.mode = spec.mode;
  o.protocol = spec.protocol;
  o.phi2 = spec.phi2;
  o.x_basis = sim.config.x_basis_allowed;
  o.gate_based_swap = spec.gate_based_swap;
  o.passes = spec.passes;
  o.trace = trace;
  sim.compiled = compile(sim.workload, o);
  AtomLayout layout = build_layout(sim.config, sim.workload.num_qubits());
  sim.timeline = schedule(sim.compiled.program, layout, sim.config);
  sim.report = make_report(sim.workload.label, std::string(mode_name(spec.mode)), sim.compiled.counts,
                           sim.timeline, sim.config);
  return sim;
}

std::string compile_output(const Simulation& sim, OutputFormat format) {
  const GateCounts& c = sim.compiled.counts;
  const LdStCount& ls = sim.report.ld_st;
  switch (format) {
    case OutputFormat::Json: return program_json(sim);
    case OutputFormat::Csv:
      return "workload,mode,one_qubit,two_qubit,virtual_rz,physical,boundary_crossings,loads,stores,ld_st\n" +
             sim.workload.label + "," + sim.report.mode + "," + std::to_string(c.one_qubit) + "," +
             std::to_string(c.two_qubit) + "," + std::to_string(c.virtual_rz) + "," +
             std::to_string(physical_gate_count(c)) + "," +
             std::to_string(sim.compiled.program.boundary_crossings()) + "," + std::to_string(ls.loads) +
             "," + std::to_string(ls.stores) + "," + std::to_string(ls.total()) + "\n";
    case OutputFormat::Human: break;
  }
  std::ostringstream os;
  os << "# " << sim.workload.label << " (" << sim.report.mode << ")\n" << dump(sim.compiled.program);
  os << "gates: 1q " << c.one_qubit << ", 2q " << c.two_qubit << ", rz " << c.virtual_rz << ", physical "
     << physical_gate_count(c) << "\n";
  os << "boundary crossings: " << sim.compiled.program.boundary_crossings() << "\n";
  os << "ld/st: " << ls.total() << " (" << ls.loads << " load, " << ls.stores << " store, "
     << policy_name(sim.config.policy) << ")\n";
  return os.str();
}

std::string simulate_output(const Simulation& sim, OutputFormat format, bool per_qubit) {
  switch (format) {
    case OutputFormat::Json: return report_json(sim.report, per_qubit);
    case OutputFormat::Csv: return report_csv_header() + "\n" + report_csv_row(sim.report) + "\n";
    case OutputFormat::Human: break;
  }
  return report_human(sim.report);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"zonec: circuit compiler and cost simulator for zoned neutral-atom machines"};
  app.require_subcommand(1);
  RawOptions compile_opts, sim_opts, sweep_opts;
  std::vector<std::string> axes;
  auto* compile_cmd = app.add_subcommand("compile", "print the zone-step program, gate and LD/ST counts");
  add_common(compile_cmd, compile_opts);
  auto* sim_cmd = app.add_subcommand("simulate", "schedule and report time breakdown and fidelity");
  add_common(sim_cmd, sim_opts);
  sim_cmd->add_flag("--per-qubit", sim_opts.per_qubit, "per-qubit fidelity factors in json output");
  sim_cmd->add_option("--timeline", sim_opts.timeline, "write the event timeline to this file");
  auto* sweep_cmd = app.add_subcommand("sweep", "run a templated spec over parameter axes, one CSV row per point");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--axis", axes, "key=v1,v2,... substituted for {key}; repeat for a product")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto env_config = [](RawOptions& o) {
    if (o.config.empty()) {
      if (const char* env = std::getenv("ZONEC_CONFIG")) o.config = env;
    }
  };

  try {
    if (compile_cmd->parsed() || sim_cmd->parsed()) {
      RawOptions& raw = compile_cmd->parsed() ? compile_opts : sim_opts;
      env_config(raw);
      RunSpec spec = to_spec(raw);
      check_run_spec(spec);
      Simulation sim = run_simulation(spec, raw.trace ? &err : nullptr);
      if (compile_cmd->parsed()) {
        out << compile_output(sim, spec.format);
      } else {
        out << simulate_output(sim, spec.format, spec.per_qubit);
        if (!raw.timeline.empty()) {
          std::ofstream f(raw.timeline, std::ios::binary);
          if (!f) throw ConfigError("cannot write '" + raw.timeline + "'");
          f << export_timeline(sim.timeline);
        }
      }
      return 0;
    }

    env_config(sweep_opts);
    std::vector<std::pair<std::string, std::vector<std::string>>> axis_values;
    for (const std::string& a : axes) {
      auto eq = a.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--axis must look like key=v1,v2");
      axis_values.emplace_back(a.substr(0, eq), split(a.substr(eq + 1), ','));
    }
    std::vector<std::map<std::string, std::string>> points(1);
    for (const auto& [key, values] : axis_values) {
      std::vector<std::map<std::string, std::string>> next;
      for (const auto& p : points) {
        for (const std::string& v : values) {
          auto q = p;
          q[key] = v;
          next.push_back(std::move(q));
        }
      }
      points = std::move(next);
    }
    // Reject malformed non-templated options up front; templated ones are
    // checked per point.
    to_spec(untemplated(sweep_opts));

    const std::string report_header = report_csv_header();
    const auto empty_fields =
        static_cast<std::size_t>(std::count(report_header.begin(), report_header.end(), ',')) + 1;
    std::vector<std::string> rows(points.size()), errors(points.size());
    const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      std::string prefix;
      for (const auto& [key, values] : axis_values) prefix += points[i].at(key) + ",";
      try {
        RunSpec spec = to_spec(substitute(sweep_opts, points[i]));
        Simulation sim = run_simulation(spec);
        rows[i] = prefix + "ok," + report_csv_row(sim.report);
      } catch (const std::exception& e) {
        rows[i] = prefix + "failed" + std::string(empty_fields, ',');
        errors[i] = e.what();
      }
    }
    std::string header;
    for (const auto& [key, values] : axis_values) header += key + ",";
    out << header << "status," << report_header << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << rows[i] << "\n";
      if (!errors[i].empty()) err << "zonec: point " << i << ": " << errors[i] << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    err << "zonec: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace zonec
