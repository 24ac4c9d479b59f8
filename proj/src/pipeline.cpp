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

#include "zonec/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

namespace zonec {

namespace {

bool is_builder(std::string_view name) {
  return name == "align" || name == "segment" || name == "layers";
}

bool is_synth(std::string_view name) { return name == "synth-fountain" || name == "synth-path"; }

Circuit measure_all(Circuit c) {
  for (std::size_t q = 0; q < c.num_qubits(); ++q) c.append(GateKind::MEASURE, {static_cast<Qubit>(q)});
  return c;
}

Circuit synthesize(const PauliTermFile& file, bool fountain, std::size_t& phase_only) {
  Circuit c(file.num_qubits);
  for (const PauliTerm& t : file.terms) {
    bool empty = false;
    c.append_all(fountain ? synth_pauli_fountain(t, empty) : synth_pauli_path(t, empty));
    phase_only += empty;
  }
  return c;
}

void trace(const PipelineOptions& o, std::string_view pass, const Circuit& c) {
  if (o.trace) *o.trace << "# after " << pass << "\n" << dump(c);
}

}  // namespace

std::string_view mode_name(CompileMode mode) {
  return mode == CompileMode::Standard ? "standard" : "mantra";
}

const std::vector<std::string>& known_passes() {
  static const std::vector<std::string> names = {
      "synth-fountain", "synth-path", "substitute-rzz", "substitute-rzz-cz", "decompose-rzz",
      "lower-cx",       "cancel-h",   "x-basis",        "lower-swap",        "lower-swap-gates",
      "layered-lowering", "align",  "segment",        "layers"};
  return names;
}

std::vector<std::string> default_passes(const PipelineOptions& o) {
  std::vector<std::string> p;
  const std::string swap = o.gate_based_swap ? "lower-swap-gates" : "lower-swap";
  if (o.mode == CompileMode::Optimized) {
    p = {"synth-fountain", "substitute-rzz", "lower-cx", "cancel-h"};
    if (o.gate_based_swap) p.insert(p.begin() + 2, swap);
    if (o.x_basis) p.push_back("x-basis");
    if (!o.gate_based_swap) p.push_back(swap);
    p.push_back("align");
  } else {
    p = {"synth-path", "decompose-rzz"};
    if (o.gate_based_swap) p.push_back(swap);
    p.insert(p.end(), {"layered-lowering", "cancel-h"});
    if (o.x_basis) p.push_back("x-basis");
    if (!o.gate_based_swap) p.push_back(swap);
    p.push_back("segment");
  }
  return p;
}

Workload workload_from_circuit(Circuit circuit, std::string label) {
  Workload w;
  w.label = std::move(label);
  w.circuit = std::move(circuit);
  return w;
}

Workload workload_from_terms(PauliTermFile terms, std::string label) {
  Workload w;
  w.label = std::move(label);
  w.is_pauli = true;
  w.terms = std::move(terms);
  return w;
}

Workload build_bench(const BenchmarkSpec& spec) {
  const std::size_t n = spec.num_qubits;
  std::string label = std::string(bench_family_name(spec.family)) + ":" + std::to_string(n) + ":";
  switch (spec.family) {
    case BenchFamily::Ghz:
      return workload_from_circuit(measure_all(gen_ghz(n, spec.chain)),
                                   label + std::string(chain_name(spec.chain)));
    case BenchFamily::Ucc: {
      Workload w = workload_from_terms(gen_ucc_random(n, spec.num_terms, spec.seed),
                                       label + std::to_string(spec.num_terms));
      w.measure_all = true;
      return w;
    }
    case BenchFamily::QaoaSk:
    case BenchFamily::QaoaPl:
    case BenchFamily::Po: {
      Graph g;
      if (spec.family == BenchFamily::QaoaPl) {
        g = power_law_graph(n, spec.seed);
      } else {
        g = complete_graph(n);
      }
      if (spec.family == BenchFamily::Po) {
        // Seeded covariance couplings and expected-return fields.
        std::mt19937_64 rng(spec.seed ^ 0x5bd1e995ULL);
        auto draw = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
        for (WeightedEdge& e : g.edges) e.weight = draw();
        g.node_weights.resize(n);
        for (double& h : g.node_weights) h = draw();
      }
      std::vector<double> gammas, betas;
      qaoa_angles(spec.layers, spec.seed, gammas, betas);
      return workload_from_circuit(gen_qaoa(g, spec.layers, gammas, betas),
                                   label + std::to_string(spec.layers));
    }
  }
  throw CircuitError("build_bench: unknown family");
}

CompileResult compile(const Workload& workload, const PipelineOptions& options) {
  CompileResult r;
  r.passes = options.passes.empty() ? default_passes(options) : options.passes;
  for (const std::string& p : r.passes) {
    if (std::find(known_passes().begin(), known_passes().end(), p) == known_passes().end()) {
      throw CircuitError("unknown pass '" + p + "'");
    }
  }
  if (r.passes.empty() || !is_builder(r.passes.back())) {
    throw CircuitError("pass list must end with align, segment or layers");
  }

  std::size_t first = 0;
  Circuit c;
  if (workload.is_pauli) {
    if (!is_synth(r.passes.front())) {
      throw CircuitError("pauli input needs synth-fountain or synth-path as the first pass");
    }
    c = synthesize(workload.terms, r.passes.front() == "synth-fountain", r.phase_only_terms);
    if (workload.measure_all) c = measure_all(std::move(c));
    trace(options, r.passes.front(), c);
    first = 1;
  } else {
    c = workload.measure_all ? measure_all(workload.circuit) : workload.circuit;
    if (options.trace) *options.trace << "# input\n" << dump(c);
  }

  r.final_wire.resize(c.num_qubits());
  std::iota(r.final_wire.begin(), r.final_wire.end(), Qubit{0});
  std::vector<RemapDirective> remaps;
  bool swaps_lowered = false;
  for (std::size_t i = first; i + 1 < r.passes.size(); ++i) {
    const std::string& p = r.passes[i];
    if (swaps_lowered) {
      throw CircuitError("lower-swap must be the last pass before the program builder");
    }
    if (is_synth(p)) {
      if (workload.is_pauli) throw CircuitError("synthesis pass '" + p + "' must come first");
      continue;  // circuit inputs need no synthesis
    } else if (is_builder(p)) {
      throw CircuitError("program builder '" + p + "' must be the last pass");
    } else if (p == "substitute-rzz" || p == "substitute-rzz-cz") {
      SubstituteOptions so;
      so.protocol = options.protocol;
      so.phi2 = options.phi2;
      so.match_cz_idiom = p == "substitute-rzz-cz";
      c = substitute_rzz(c, so);
    } else if (p == "decompose-rzz") {
      c = decompose_rzz(c);
    } else if (p == "lower-cx") {
      c = lower_cx_to_cz(c);
    } else if (p == "cancel-h") {
      c = cancel_hadamard_pairs(c);
    } else if (p == "x-basis") {
      c = absorb_x_basis(c);
    } else if (p == "lower-swap") {
      SwapLowering s = lower_swap(c);
      c = std::move(s.circuit);
      remaps = std::move(s.remaps);
      r.final_wire = std::move(s.final_wire);
      swaps_lowered = true;
    } else if (p == "lower-swap-gates") {
      c = lower_swap_gate_based(c);
    } else if (p == "layered-lowering") {
      c = layered_lowering(c);
    }
    trace(options, p, c);
  }

  const std::string& builder = r.passes.back();
  if (builder == "align") {
    r.program = align_zone_steps(c);
  } else if (builder == "segment") {
    r.program = segment_program_order(c);
  } else {
    r.program = unaligned_zone_steps(c);
  }
  r.program.remaps = std::move(remaps);
  if (options.trace) *options.trace << "# program\n" << dump(r.program);
  r.counts = count_gates(c);
  r.lowered = std::move(c);
  return r;
}

Circuit reference_circuit(const Workload& workload) {
  Circuit src(workload.num_qubits());
  if (workload.is_pauli) {
    std::size_t unused = 0;
    src = synthesize(workload.terms, false, unused);
  } else {
    for (const Gate& g : workload.circuit.gates()) {
      if (g.kind != GateKind::MEASURE) src.append(g);
    }
  }
  return src;
}

std::size_t physical_gate_count(const GateCounts& counts) {
  return kPhysicalPerLogicalGate * counts.logical_total();
}

}  // namespace zonec
