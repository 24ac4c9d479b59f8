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

#include "zonec/rewrite.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

namespace zonec {

namespace {

using std::numbers::pi;

Circuit with_gates(std::size_t n, const std::vector<Gate>& gates) {
  Circuit out(n);
  for (const Gate& g : gates) out.append(g);
  return out;
}

// Per-qubit successor lookup over a fixed gate list.
class QubitTimeline {
 public:
  explicit QubitTimeline(const Circuit& c) : per_qubit_(c.num_qubits()) {
    pos_.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (Qubit q : c[i].operands()) {
        pos_[i].push_back(per_qubit_[q].size());
        per_qubit_[q].push_back(i);
      }
    }
  }

  /// Gate index following gate `i` on qubit `q`, if any. `q` must be an operand of `i`.
  std::optional<std::size_t> next(const Circuit& c, std::size_t i, Qubit q) const {
    auto ops = c[i].operands();
    std::size_t slot = ops[0] == q ? 0 : 1;
    std::size_t p = pos_[i][slot] + 1;
    if (p >= per_qubit_[q].size()) return std::nullopt;
    return per_qubit_[q][p];
  }

  const std::vector<std::size_t>& on(Qubit q) const { return per_qubit_[q]; }

 private:
  std::vector<std::vector<std::size_t>> per_qubit_;
  std::vector<std::vector<std::size_t>> pos_;
};

bool is_gate(const Circuit& c, std::optional<std::size_t> i, GateKind kind, Qubit q) {
  return i && c[*i].kind == kind && c[*i].arity() == 1 && c[*i].qubits[0] == q;
}

bool same_pair(const Gate& g, GateKind kind, Qubit a, Qubit b, bool ordered) {
  if (g.kind != kind) return false;
  if (g.qubits[0] == a && g.qubits[1] == b) return true;
  return !ordered && g.qubits[0] == b && g.qubits[1] == a;
}

void append_basis_in(std::vector<Gate>& out, Qubit q, char p) {
  if (p == 'X') out.push_back(make_gate(GateKind::H, {q}));
  if (p == 'Y') out.push_back(make_gate(GateKind::RX, {q}, {pi / 2}));
}

void append_basis_out(std::vector<Gate>& out, Qubit q, char p) {
  if (p == 'X') out.push_back(make_gate(GateKind::H, {q}));
  if (p == 'Y') out.push_back(make_gate(GateKind::RX, {q}, {-pi / 2}));
}

std::vector<Qubit> support(const PauliTerm& term) {
  std::vector<Qubit> s;
  for (std::size_t q = 0; q < term.label.size(); ++q) {
    if (term.label[q] != 'I') s.push_back(static_cast<Qubit>(q));
  }
  return s;
}

void check_term(const PauliTerm& term) {
  if (term.label.empty()) throw CircuitError("pauli term has an empty label");
  validate_pauli(term, term.label.size());
}

bool zone_alternates(Zone z) { return z == Zone::Storage || z == Zone::Entangling; }

Zone other_zone(Zone z) { return z == Zone::Storage ? Zone::Entangling : Zone::Storage; }

void push_step(ZoneStepProgram& p, Zone zone, const Gate& g, std::size_t src) {
  if (p.steps.empty() || p.steps.back().zone != zone) p.steps.push_back({zone, {}, {}});
  p.steps.back().gates.push_back(g);
  p.steps.back().source.push_back(src);
}

void add_readout(ZoneStepProgram& p, const Circuit& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].kind == GateKind::MEASURE) push_step(p, Zone::Readout, c[i], i);
  }
}

void check_alignable(const Circuit& c) {
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::SWAP || g.kind == GateKind::CX) {
      throw CircuitError("align_zone_steps: input still contains " +
                         std::string(gate_name(g.kind)));
    }
  }
}

ZoneStepProgram greedy_from(const Circuit& c, Zone start,
                            const std::vector<std::vector<std::size_t>>& preds) {
  ZoneStepProgram p;
  p.num_qubits = c.num_qubits();
  std::vector<bool> done(c.size(), false);
  std::size_t remaining = 0;
  for (const Gate& g : c.gates()) remaining += g.kind != GateKind::MEASURE;
  Zone zone = start;
  std::size_t idle = 0;
  while (remaining > 0) {
    ZoneStep step{zone, {}, {}};
    // A forward scan sees every hoisted gate before its successors, so
    // readiness is transitive within the step.
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (done[i] || c[i].zone() != zone) continue;
      bool ready = std::all_of(preds[i].begin(), preds[i].end(), [&](std::size_t j) { return done[j]; });
      if (!ready) continue;
      done[i] = true;
      --remaining;
      step.gates.push_back(c[i]);
      step.source.push_back(i);
    }
    if (!step.gates.empty()) {
      p.steps.push_back(std::move(step));
      idle = 0;
    } else if (++idle > 2) {
      throw CircuitError("align_zone_steps: no schedulable gate");
    }
    zone = other_zone(zone);
  }
  add_readout(p, c);
  return p;
}

}  // namespace

Circuit lower_cx_to_cz(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::CX) {
      out.append(g);
      continue;
    }
    Qubit c = g.qubits[0], t = g.qubits[1];
    out.append(GateKind::H, {t});
    out.append(GateKind::CZ, {c, t});
    out.append(GateKind::H, {t});
  }
  return out;
}

Circuit cancel_hadamard_pairs(const Circuit& circuit) {
  const auto& gates = circuit.gates();
  std::vector<bool> removed(gates.size(), false);
  // top[q]: last surviving gate on q. A 1Q gate lives only on its own stack,
  // so popping an H exposes exactly the gate before it on that qubit.
  std::vector<std::vector<std::size_t>> stack(circuit.num_qubits());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::H) {
      auto& s = stack[g.qubits[0]];
      if (!s.empty() && gates[s.back()].kind == GateKind::H) {
        removed[s.back()] = true;
        removed[i] = true;
        s.pop_back();
        continue;
      }
    }
    for (Qubit q : g.operands()) stack[q].push_back(i);
  }
  Circuit out(circuit.num_qubits());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!removed[i]) out.append(gates[i]);
  }
  return out;
}

Circuit decompose_rzz(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::RZZ) {
      out.append(g);
      continue;
    }
    Qubit a = g.qubits[0], b = g.qubits[1];
    out.append(GateKind::CX, {a, b});
    out.append(GateKind::RZ, {b}, {g.params[0]});
    out.append(GateKind::CX, {a, b});
  }
  return out;
}

Circuit synth_pauli_fountain(const PauliTerm& term, bool& phase_only) {
  check_term(term);
  const std::vector<Qubit> s = support(term);
  phase_only = s.empty();
  Circuit raw(term.num_qubits());
  if (s.empty()) return raw;
  const Qubit target = s.front();
  std::vector<Gate> g;
  for (Qubit q : s) append_basis_in(g, q, term.label[q]);
  // CX(q, target) lowered as H CZ H; the adjacent inner H pairs on the
  // shared target cancel below.
  for (std::size_t k = 1; k < s.size(); ++k) {
    g.push_back(make_gate(GateKind::H, {target}));
    g.push_back(make_gate(GateKind::CZ, {s[k], target}));
    g.push_back(make_gate(GateKind::H, {target}));
  }
  g.push_back(make_gate(GateKind::RZ, {target}, {term.theta}));
  for (std::size_t k = s.size(); k-- > 1;) {
    g.push_back(make_gate(GateKind::H, {target}));
    g.push_back(make_gate(GateKind::CZ, {s[k], target}));
    g.push_back(make_gate(GateKind::H, {target}));
  }
  for (Qubit q : s) append_basis_out(g, q, term.label[q]);
  return cancel_hadamard_pairs(with_gates(term.num_qubits(), g));
}

Circuit synth_pauli_fountain(const PauliTerm& term) {
  bool phase_only = false;
  return synth_pauli_fountain(term, phase_only);
}

Circuit synth_pauli_path(const PauliTerm& term, bool& phase_only) {
  check_term(term);
  const std::vector<Qubit> s = support(term);
  phase_only = s.empty();
  Circuit c(term.num_qubits());
  if (s.empty()) return c;
  std::vector<Gate> g;
  for (Qubit q : s) append_basis_in(g, q, term.label[q]);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) g.push_back(make_gate(GateKind::CX, {s[k], s[k + 1]}));
  g.push_back(make_gate(GateKind::RZ, {s.back()}, {term.theta}));
  for (std::size_t k = s.size() - 1; k-- > 0;) g.push_back(make_gate(GateKind::CX, {s[k], s[k + 1]}));
  for (Qubit q : s) append_basis_out(g, q, term.label[q]);
  return with_gates(term.num_qubits(), g);
}

Circuit synth_pauli_path(const PauliTerm& term) {
  bool phase_only = false;
  return synth_pauli_path(term, phase_only);
}

Circuit substitute_rzz(const Circuit& circuit, const SubstituteOptions& options) {
  const QubitTimeline tl(circuit);
  const std::size_t n = circuit.size();
  std::vector<bool> consumed(n, false);
  // replacement[i]: RZZ (a, b, gamma) emitted at position i.
  std::vector<std::optional<Gate>> replacement(n);

  auto free_all = [&](std::initializer_list<std::optional<std::size_t>> idx) {
    for (auto i : idx) {
      if (!i || consumed[*i]) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (consumed[i]) continue;
    const Gate& g = circuit[i];
    if (g.kind == GateKind::CX) {
      // CX(a,b) RZ(b) CX(a,b), nothing else on a or b in between.
      Qubit a = g.qubits[0], b = g.qubits[1];
      auto rz = tl.next(circuit, i, b);
      if (!is_gate(circuit, rz, GateKind::RZ, b)) continue;
      auto cx2 = tl.next(circuit, *rz, b);
      if (!cx2 || !same_pair(circuit[*cx2], GateKind::CX, a, b, true)) continue;
      if (tl.next(circuit, i, a) != cx2) continue;
      if (!free_all({rz, cx2})) continue;
      consumed[i] = consumed[*rz] = consumed[*cx2] = true;
      replacement[i] = make_gate(GateKind::RZZ, {a, b}, {circuit[*rz].params[0]});
    } else if (g.kind == GateKind::H && options.match_cz_idiom) {
      // H(b) CZ(a,b) H(b) RZ(b) H(b) CZ(a,b) H(b).
      Qubit b = g.qubits[0];
      auto cz1 = tl.next(circuit, i, b);
      if (!cz1 || circuit[*cz1].kind != GateKind::CZ) continue;
      const Gate& z = circuit[*cz1];
      Qubit a = z.qubits[0] == b ? z.qubits[1] : z.qubits[0];
      auto h2 = tl.next(circuit, *cz1, b);
      if (!is_gate(circuit, h2, GateKind::H, b)) continue;
      auto rz = tl.next(circuit, *h2, b);
      if (!is_gate(circuit, rz, GateKind::RZ, b)) continue;
      auto h3 = tl.next(circuit, *rz, b);
      if (!is_gate(circuit, h3, GateKind::H, b)) continue;
      auto cz2 = tl.next(circuit, *h3, b);
      if (!cz2 || !same_pair(circuit[*cz2], GateKind::CZ, a, b, false)) continue;
      if (tl.next(circuit, *cz1, a) != cz2) continue;
      auto h4 = tl.next(circuit, *cz2, b);
      if (!is_gate(circuit, h4, GateKind::H, b)) continue;
      if (!free_all({cz1, h2, rz, h3, cz2, h4})) continue;
      for (auto k : {std::optional<std::size_t>(i), cz1, h2, rz, h3, cz2, h4}) consumed[*k] = true;
      replacement[i] = make_gate(GateKind::RZZ, {a, b}, {circuit[*rz].params[0]});
    }
  }

  Circuit out(circuit.num_qubits());
  auto emit_rzz = [&](const Gate& rzz) {
    RzzRecipe r = synth_rzz(options.protocol, rzz.params[0], options.phi2);
    for (const Gate& native : r.gates(rzz.qubits[0], rzz.qubits[1])) out.append(native);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (replacement[i]) {
      emit_rzz(*replacement[i]);
    } else if (!consumed[i]) {
      if (circuit[i].kind == GateKind::RZZ) {
        emit_rzz(circuit[i]);
      } else {
        out.append(circuit[i]);
      }
    }
  }
  return out;
}

SwapLowering lower_swap(const Circuit& circuit) {
  const std::size_t nq = circuit.num_qubits();
  SwapLowering result;
  result.circuit = Circuit(nq);
  // holder[w]: output wire currently holding what the input calls wire w.
  std::vector<Qubit> holder(nq);
  std::iota(holder.begin(), holder.end(), Qubit{0});
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::SWAP) {
      Qubit a = g.qubits[0], b = g.qubits[1];
      result.remaps.push_back({result.circuit.size(), holder[a], holder[b]});
      std::swap(holder[a], holder[b]);
      continue;
    }
    Gate mapped = g;
    for (std::size_t k = 0; k < g.arity(); ++k) mapped.qubits[k] = holder[g.qubits[k]];
    result.circuit.append(mapped);
  }
  result.final_wire = holder;
  return result;
}

Circuit permutation_circuit(const std::vector<Qubit>& final_wire) {
  const std::size_t n = final_wire.size();
  Circuit c(n);
  // Selection sort by swaps: bring the state for wire w home to w.
  std::vector<Qubit> at(n);  // at[v]: input wire whose state sits on wire v
  for (std::size_t w = 0; w < n; ++w) at[final_wire[w]] = static_cast<Qubit>(w);
  for (Qubit w = 0; w < n; ++w) {
    if (at[w] == w) continue;
    Qubit v = w + 1;
    while (at[v] != w) ++v;
    c.append(GateKind::SWAP, {w, v});
    std::swap(at[w], at[v]);
  }
  return c;
}

Circuit lower_swap_gate_based(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    if (g.kind != GateKind::SWAP) {
      out.append(g);
      continue;
    }
    Qubit a = g.qubits[0], b = g.qubits[1];
    // CX(a,b) CX(b,a) CX(a,b) over CZ: four H layers around three CZ.
    out.append(GateKind::H, {b});
    out.append(GateKind::CZ, {a, b});
    out.append(GateKind::H, {a});
    out.append(GateKind::H, {b});
    out.append(GateKind::CZ, {a, b});
    out.append(GateKind::H, {a});
    out.append(GateKind::H, {b});
    out.append(GateKind::CZ, {a, b});
    out.append(GateKind::H, {b});
  }
  return out;
}

Circuit absorb_x_basis(const Circuit& circuit) {
  const QubitTimeline tl(circuit);
  std::vector<bool> drop(circuit.size(), false);
  for (Qubit q = 0; q < circuit.num_qubits(); ++q) {
    const auto& seq = tl.on(q);
    if (seq.empty()) continue;
    if (circuit[seq.front()].kind == GateKind::H) drop[seq.front()] = true;
    if (seq.size() >= 2 && circuit[seq.back()].kind == GateKind::MEASURE) {
      std::size_t last = seq[seq.size() - 2];
      if (circuit[last].kind == GateKind::H) drop[last] = true;
    }
  }
  Circuit out(circuit.num_qubits());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    if (!drop[i]) out.append(circuit[i]);
  }
  return out;
}

Circuit layered_lowering(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  std::vector<std::size_t> measures;
  for (const auto& layer : dependency_layers(circuit).layers) {
    for (std::size_t i : layer) {
      const Gate& g = circuit[i];
      if (g.kind == GateKind::MEASURE) {
        measures.push_back(i);
      } else if (g.arity() == 1) {
        out.append(g);
      }
    }
    for (std::size_t i : layer) {
      if (circuit[i].kind == GateKind::CX) out.append(GateKind::H, {circuit[i].qubits[1]});
    }
    for (std::size_t i : layer) {
      const Gate& g = circuit[i];
      if (g.kind == GateKind::CX) {
        out.append(GateKind::CZ, {g.qubits[0], g.qubits[1]});
      } else if (g.arity() == 2) {
        out.append(g);
      }
    }
    for (std::size_t i : layer) {
      if (circuit[i].kind == GateKind::CX) out.append(GateKind::H, {circuit[i].qubits[1]});
    }
  }
  for (std::size_t i : measures) out.append(circuit[i]);
  return out;
}

Circuit ZoneStepProgram::flatten() const {
  Circuit c(num_qubits);
  for (const ZoneStep& s : steps) {
    for (const Gate& g : s.gates) c.append(g);
  }
  return c;
}

std::size_t ZoneStepProgram::gate_count() const {
  std::size_t n = 0;
  for (const ZoneStep& s : steps) n += s.gates.size();
  return n;
}

std::size_t ZoneStepProgram::boundary_crossings() const {
  std::size_t crossings = 0;
  std::optional<Zone> prev;
  for (const ZoneStep& s : steps) {
    if (!zone_alternates(s.zone)) continue;
    if (prev && *prev != s.zone) ++crossings;
    prev = s.zone;
  }
  return crossings;
}

void check_program(const ZoneStepProgram& program, const Circuit& source) {
  if (program.num_qubits != source.num_qubits()) throw CircuitError("program: qubit count mismatch");
  std::vector<std::size_t> order(source.size(), SIZE_MAX);
  std::size_t position = 0;
  for (std::size_t s = 0; s < program.steps.size(); ++s) {
    const ZoneStep& step = program.steps[s];
    if (step.gates.empty()) throw CircuitError("program: empty step " + std::to_string(s));
    if (step.gates.size() != step.source.size()) throw CircuitError("program: source map size mismatch");
    if (s > 0 && program.steps[s - 1].zone == step.zone) {
      throw CircuitError("program: adjacent steps " + std::to_string(s - 1) + " and " +
                         std::to_string(s) + " share a zone");
    }
    for (std::size_t k = 0; k < step.gates.size(); ++k) {
      const Gate& g = step.gates[k];
      if (g.zone() != step.zone) {
        throw CircuitError("program: " + std::string(gate_name(g.kind)) + " in " +
                           std::string(zone_name(step.zone)) + " step");
      }
      std::size_t src = step.source[k];
      if (src >= source.size() || !(source[src] == g) || order[src] != SIZE_MAX) {
        throw CircuitError("program: bad source index " + std::to_string(src));
      }
      order[src] = position++;
    }
  }
  if (position != source.size()) throw CircuitError("program: gate count mismatch");
  auto preds = gate_predecessors(source);
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (std::size_t j : preds[i]) {
      if (order[j] > order[i]) throw CircuitError("program: dependency order violated");
    }
  }
}

ZoneStepProgram align_zone_steps(const Circuit& circuit) {
  check_alignable(circuit);
  auto preds = gate_predecessors(circuit);
  std::optional<Zone> first;
  for (const Gate& g : circuit.gates()) {
    if (zone_alternates(g.zone())) {
      first = g.zone();
      break;
    }
  }
  if (!first) {
    ZoneStepProgram p;
    p.num_qubits = circuit.num_qubits();
    add_readout(p, circuit);
    return p;
  }
  // Greedy hoisting is optimal for a fixed starting zone; trying both makes
  // the result never worse than any layered segmentation.
  ZoneStepProgram best = greedy_from(circuit, *first, preds);
  ZoneStepProgram alt = greedy_from(circuit, other_zone(*first), preds);
  if (alt.boundary_crossings() < best.boundary_crossings()) return alt;
  return best;
}

ZoneStepProgram segment_program_order(const Circuit& circuit) {
  ZoneStepProgram p;
  p.num_qubits = circuit.num_qubits();
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    if (circuit[i].kind != GateKind::MEASURE) push_step(p, circuit[i].zone(), circuit[i], i);
  }
  add_readout(p, circuit);
  return p;
}

ZoneStepProgram unaligned_zone_steps(const Circuit& circuit) {
  ZoneStepProgram p;
  p.num_qubits = circuit.num_qubits();
  for (const auto& layer : dependency_layers(circuit).layers) {
    for (Zone z : {Zone::Storage, Zone::Entangling}) {
      for (std::size_t i : layer) {
        if (circuit[i].zone() == z) push_step(p, z, circuit[i], i);
      }
    }
  }
  add_readout(p, circuit);
  return p;
}

std::string dump(const ZoneStepProgram& program) {
  std::ostringstream out;
  out << "qubits " << program.num_qubits << "\n";
  for (std::size_t s = 0; s < program.steps.size(); ++s) {
    const ZoneStep& step = program.steps[s];
    out << "step " << s << " " << zone_name(step.zone) << " " << step.gates.size() << "\n";
    Circuit c(program.num_qubits);
    for (const Gate& g : step.gates) c.append(g);
    std::string body = dump(c);
    out << body.substr(body.find('\n') + 1);
  }
  for (const RemapDirective& r : program.remaps) {
    out << "remap before " << r.before_gate << " q[" << r.a << "],q[" << r.b << "]\n";
  }
  return out.str();
}

}  // namespace zonec
