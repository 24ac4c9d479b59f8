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

#include "zonec/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace zonec {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t arity;
  std::size_t params;
};

constexpr std::array<KindInfo, 12> kKindInfo = {{
    {GateKind::H, "H", 1, 0},
    {GateKind::X, "X", 1, 0},
    {GateKind::RX, "RX", 1, 1},
    {GateKind::RZ, "RZ", 1, 1},
    {GateKind::CX, "CX", 2, 0},
    {GateKind::CZ, "CZ", 2, 0},
    {GateKind::SWAP, "SWAP", 2, 0},
    {GateKind::RZZ, "RZZ", 2, 1},
    {GateKind::CPHASE, "CPHASE", 2, 1},
    {GateKind::LP, "LP", 2, 1},
    {GateKind::AD, "AD", 2, 2},
    {GateKind::MEASURE, "MEASURE", 1, 0},
}};

const KindInfo& info(GateKind kind) { return kKindInfo[static_cast<std::size_t>(kind)]; }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }
std::size_t gate_arity(GateKind kind) { return info(kind).arity; }
std::size_t gate_param_count(GateKind kind) { return info(kind).params; }
bool is_two_qubit(GateKind kind) { return gate_arity(kind) == 2; }

Zone gate_zone(GateKind kind) {
  if (kind == GateKind::MEASURE) return Zone::Readout;
  return is_two_qubit(kind) ? Zone::Entangling : Zone::Storage;
}

std::string_view zone_name(Zone zone) {
  switch (zone) {
    case Zone::Storage:
      return "storage";
    case Zone::Entangling:
      return "entangling";
    case Zone::Readout:
      return "readout";
  }
  return "?";
}

bool Gate::touches(Qubit q) const {
  for (Qubit op : operands()) {
    if (op == q) return true;
  }
  return false;
}

Gate make_gate(GateKind kind, std::initializer_list<Qubit> qubits,
               std::initializer_list<double> params) {
  if (qubits.size() != gate_arity(kind)) {
    throw CircuitError(std::string(gate_name(kind)) + " expects " +
                       std::to_string(gate_arity(kind)) + " operand(s), got " +
                       std::to_string(qubits.size()));
  }
  if (params.size() != gate_param_count(kind)) {
    throw CircuitError(std::string(gate_name(kind)) + " expects " +
                       std::to_string(gate_param_count(kind)) + " parameter(s), got " +
                       std::to_string(params.size()));
  }
  Gate g;
  g.kind = kind;
  std::size_t i = 0;
  for (Qubit q : qubits) g.qubits[i++] = q;
  i = 0;
  for (double p : params) g.params[i++] = p;
  return g;
}

void Circuit::check(const Gate& gate) const {
  for (Qubit q : gate.operands()) {
    if (q >= num_qubits_) {
      throw CircuitError("qubit index " + std::to_string(q) + " out of range for " +
                         std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw CircuitError(std::string(gate_name(gate.kind)) + " has duplicate operands q[" +
                       std::to_string(gate.qubits[0]) + "]");
  }
  for (std::size_t i = gate.arity(); i < 2; ++i) {
    if (gate.qubits[i] != 0) throw CircuitError("unused operand slot must be zero");
  }
  for (std::size_t i = gate_param_count(gate.kind); i < 2; ++i) {
    if (gate.params[i] != 0.0) throw CircuitError("unused parameter slot must be zero");
  }
  for (std::size_t i = 0; i < gate_param_count(gate.kind); ++i) {
    if (!std::isfinite(gate.params[i])) throw CircuitError("non-finite gate parameter");
  }
}

Circuit& Circuit::append(GateKind kind, std::initializer_list<Qubit> qubits,
                         std::initializer_list<double> params) {
  return append(make_gate(kind, qubits, params));
}

Circuit& Circuit::append(const Gate& gate) {
  check(gate);
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append_all(const Circuit& other) {
  for (const Gate& g : other.gates()) append(g);
  return *this;
}

Circuit Circuit::widened(std::size_t num_qubits) const {
  if (num_qubits < num_qubits_) throw CircuitError("cannot shrink a circuit register");
  Circuit out(num_qubits);
  out.gates_ = gates_;
  return out;
}

std::vector<std::vector<std::size_t>> gate_predecessors(const Circuit& circuit) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last(circuit.num_qubits(), kNone);
  std::vector<std::vector<std::size_t>> preds(circuit.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    for (Qubit q : circuit[i].operands()) {
      if (last[q] != kNone &&
          (preds[i].empty() || preds[i].back() != last[q])) {
        preds[i].push_back(last[q]);
      }
      last[q] = i;
    }
  }
  return preds;
}

DependencyLayers dependency_layers(const Circuit& circuit) {
  std::vector<std::size_t> frontier(circuit.num_qubits(), 0);
  DependencyLayers out;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    std::size_t layer = 0;
    for (Qubit q : circuit[i].operands()) layer = std::max(layer, frontier[q]);
    if (layer == out.layers.size()) out.layers.emplace_back();
    out.layers[layer].push_back(i);
    for (Qubit q : circuit[i].operands()) frontier[q] = layer + 1;
  }
  return out;
}

std::size_t GateCounts::of(GateKind kind) const {
  auto it = by_kind.find(kind);
  return it == by_kind.end() ? 0 : it->second;
}

GateCounts count_gates(const Circuit& circuit) {
  GateCounts counts;
  for (GateKind k : kAllGateKinds) counts.by_kind[k] = 0;
  for (const Gate& g : circuit.gates()) {
    ++counts.by_kind[g.kind];
    if (g.kind == GateKind::RZ) {
      ++counts.virtual_rz;
    } else if (g.kind == GateKind::MEASURE) {
      ++counts.measure;
    } else if (is_two_qubit(g.kind)) {
      ++counts.two_qubit;
    } else {
      ++counts.one_qubit;
    }
  }
  return counts;
}

std::string dump(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.num_qubits()) + "\n";
  for (const Gate& g : circuit.gates()) {
    out += gate_name(g.kind);
    out += ' ';
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (i) out += ',';
      out += "q[" + std::to_string(g.qubits[i]) + "]";
    }
    std::size_t np = gate_param_count(g.kind);
    if (np) {
      out += " (";
      for (std::size_t i = 0; i < np; ++i) {
        if (i) out += ',';
        out += format_double(g.params[i]);
      }
      out += ')';
    }
    out += '\n';
  }
  return out;
}

namespace {

class DumpReader {
 public:
  explicit DumpReader(std::string_view line, std::size_t lineno) : s_(line), lineno_(lineno) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw CircuitError("line " + std::to_string(lineno_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  Qubit index() {
    skip_ws();
    Qubit v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  double number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')' && s_[pos_] != ' ') ++pos_;
    std::string tok(s_.substr(start, pos_ - start));
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) fail("bad number '" + tok + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad number '" + tok + "'");
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t lineno_;
};

}  // namespace

Circuit parse_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  Circuit circuit;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    DumpReader r(line, lineno);
    std::string_view head = r.word();
    if (!have_header) {
      if (head != "qubits") r.fail("expected 'qubits <n>' header");
      circuit = Circuit(r.index());
      have_header = true;
      if (!r.at_end()) r.fail("trailing characters");
      continue;
    }
    const KindInfo* found = nullptr;
    for (const auto& k : kKindInfo) {
      if (k.name == head) found = &k;
    }
    if (!found) r.fail("unknown gate '" + std::string(head) + "'");
    Gate g;
    g.kind = found->kind;
    for (std::size_t i = 0; i < found->arity; ++i) {
      if (i) r.expect(',');
      if (r.word() != "q") r.fail("expected q[...]");
      r.expect('[');
      g.qubits[i] = r.index();
      r.expect(']');
    }
    if (found->params) {
      r.expect('(');
      for (std::size_t i = 0; i < found->params; ++i) {
        if (i) r.expect(',');
        g.params[i] = r.number();
      }
      r.expect(')');
    }
    if (!r.at_end()) r.fail("trailing characters");
    try {
      circuit.append(g);
    } catch (const CircuitError& e) {
      r.fail(e.what());
    }
  }
  if (!have_header) throw CircuitError("empty circuit dump");
  return circuit;
}

std::size_t PauliTerm::weight() const {
  return static_cast<std::size_t>(std::count_if(label.begin(), label.end(), [](char c) { return c != 'I'; }));
}

void validate_pauli(const PauliTerm& term, std::size_t num_qubits) {
  if (term.label.size() != num_qubits) {
    throw CircuitError("pauli label '" + term.label + "' has length " +
                       std::to_string(term.label.size()) + ", expected " + std::to_string(num_qubits));
  }
  for (char c : term.label) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw CircuitError("pauli label '" + term.label + "' contains '" + std::string(1, c) + "'");
    }
  }
  if (!std::isfinite(term.theta)) throw CircuitError("pauli angle must be finite");
}

double normalize_angle(double radians) {
  return std::fmod(radians, 2.0 * std::numbers::pi);
}

}  // namespace zonec
