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

#include "zonec/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace zonec {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

using std::numbers::pi;

constexpr std::size_t kMaxRegister = 1 << 16;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// QASM lexer

enum class Tok { Ident, Number, String, Punct, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          t.text += take();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.kind = Tok::Number;
        lex_number(t);
      } else if (c == '"') {
        t.kind = Tok::String;
        take();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += take();
        if (pos_ >= src_.size() || src_[pos_] != '"') {
          throw ParseError(t.line, t.col, "unterminated string");
        }
        take();
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        t.kind = Tok::Arrow;
        t.text = "->";
        take();
        take();
      } else if (std::string_view("();,[]{}+-*/^=").find(c) != std::string_view::npos) {
        t.kind = Tok::Punct;
        t.text = std::string(1, take());
      } else {
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "\\x" + std::to_string(static_cast<unsigned char>(c));
        throw ParseError(t.line, t.col, "unexpected character '" + shown + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& t) {
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text += take();
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      t.text += take();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      t.text += take();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) t.text += take();
      std::size_t before = t.text.size();
      digits();
      if (t.text.size() == before) throw ParseError(t.line, t.col, "malformed exponent");
    }
    if (t.text == ".") throw ParseError(t.line, t.col, "malformed number");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// QASM parser

struct QasmGate {
  GateKind kind;
  std::size_t qubits;
  std::size_t params;
};

const std::map<std::string, QasmGate, std::less<>>& qasm_gates() {
  static const std::map<std::string, QasmGate, std::less<>> table = {
      {"h", {GateKind::H, 1, 0}},     {"x", {GateKind::X, 1, 0}},
      {"rx", {GateKind::RX, 1, 1}},   {"rz", {GateKind::RZ, 1, 1}},
      {"cx", {GateKind::CX, 2, 0}},   {"CX", {GateKind::CX, 2, 0}},
      {"cz", {GateKind::CZ, 2, 0}},   {"swap", {GateKind::SWAP, 2, 0}},
      {"rzz", {GateKind::RZZ, 2, 1}},
  };
  return table;
}

class QasmParser {
 public:
  explicit QasmParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Circuit run() {
    header();
    while (peek().kind != Tok::End) statement();
    if (!qreg_) throw ParseError(peek().line, peek().col, "no qreg declared");
    return circuit_;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.col, msg);
  }
  std::string show(const Token& t) const {
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  }
  bool is_punct(const Token& t, char c) const {
    return t.kind == Tok::Punct && t.text.size() == 1 && t.text[0] == c;
  }
  void expect(char c) {
    const Token& t = next();
    if (!is_punct(t, c)) fail(t, std::string("expected '") + c + "' but found " + show(t));
  }
  const Token& expect_ident() {
    const Token& t = next();
    if (t.kind != Tok::Ident) fail(t, "expected identifier but found " + show(t));
    return t;
  }
  std::size_t expect_index() {
    const Token& t = next();
    if (t.kind != Tok::Number || t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail(t, "expected integer index but found " + show(t));
    }
    if (t.text.size() > 9) fail(t, "index too large");
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  void header() {
    const Token& t = next();
    if (t.kind != Tok::Ident || t.text != "OPENQASM") fail(t, "expected 'OPENQASM 2.0;' header");
    const Token& v = next();
    if (v.kind != Tok::Number || (v.text != "2.0" && v.text != "2")) {
      fail(v, "unsupported OPENQASM version " + show(v));
    }
    expect(';');
  }

  void statement() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t, "expected statement but found " + show(t));
    if (t.text == "include") {
      next();
      const Token& s = next();
      if (s.kind != Tok::String) fail(s, "expected include file name");
      if (s.text != "qelib1.inc") fail(s, "only qelib1.inc may be included");
      expect(';');
    } else if (t.text == "qreg") {
      next();
      declare_qreg();
    } else if (t.text == "creg") {
      next();
      const Token& name = expect_ident();
      expect('[');
      std::size_t size = expect_index();
      expect(']');
      expect(';');
      cregs_[name.text] = size;
    } else if (t.text == "measure") {
      next();
      measure(t);
    } else if (t.text == "gate" || t.text == "opaque") {
      fail(t, "custom gate definitions are not supported");
    } else if (t.text == "if") {
      fail(t, "classical control is not supported");
    } else {
      gate(t);
    }
  }

  void declare_qreg() {
    const Token& name = expect_ident();
    if (qreg_) fail(name, "only one qreg is supported");
    expect('[');
    const Token& size_tok = peek();
    std::size_t size = expect_index();
    if (size == 0 || size > kMaxRegister) fail(size_tok, "qreg size out of range");
    expect(']');
    expect(';');
    qreg_ = name.text;
    circuit_ = Circuit(size);
    measured_.assign(size, false);
  }

  // Operand: reg[i] or bare reg (broadcast). Returns the qubit list.
  std::vector<Qubit> operand() {
    const Token& name = expect_ident();
    if (!qreg_ || name.text != *qreg_) fail(name, "undeclared register '" + name.text + "'");
    std::vector<Qubit> out;
    if (is_punct(peek(), '[')) {
      next();
      const Token& idx_tok = peek();
      std::size_t idx = expect_index();
      if (idx >= circuit_.num_qubits()) {
        fail(idx_tok, "index " + std::to_string(idx) + " out of range for " + name.text + "[" +
                          std::to_string(circuit_.num_qubits()) + "]");
      }
      expect(']');
      out.push_back(static_cast<Qubit>(idx));
    } else {
      for (std::size_t q = 0; q < circuit_.num_qubits(); ++q) out.push_back(static_cast<Qubit>(q));
    }
    return out;
  }

  void check_classical(const Token& name_tok, std::size_t width) {
    auto it = cregs_.find(name_tok.text);
    if (it == cregs_.end()) fail(name_tok, "undeclared register '" + name_tok.text + "'");
    if (width > it->second) fail(name_tok, "classical register too small");
  }

  void measure(const Token& at) {
    std::vector<Qubit> qs = operand();
    const Token& arrow = next();
    if (arrow.kind != Tok::Arrow) fail(arrow, "expected '->' in measure");
    const Token& cname = expect_ident();
    if (is_punct(peek(), '[')) {
      next();
      const Token& idx_tok = peek();
      std::size_t idx = expect_index();
      check_classical(cname, idx + 1);
      (void)idx_tok;
      expect(']');
    } else {
      check_classical(cname, qs.size());
    }
    expect(';');
    for (Qubit q : qs) {
      if (measured_[q]) fail(at, "qubit " + std::to_string(q) + " measured twice");
      measured_[q] = true;
      emit(at, make_gate(GateKind::MEASURE, {q}));
    }
  }

  void gate(const Token& name) {
    next();
    auto it = qasm_gates().find(name.text);
    if (it == qasm_gates().end()) fail(name, "unsupported gate '" + name.text + "'");
    if (!qreg_) fail(name, "gate before qreg declaration");
    const QasmGate& spec = it->second;
    std::vector<double> params;
    if (is_punct(peek(), '(')) {
      next();
      if (!is_punct(peek(), ')')) {
        params.push_back(expr());
        while (is_punct(peek(), ',')) {
          next();
          params.push_back(expr());
        }
      }
      expect(')');
    }
    if (params.size() != spec.params) {
      fail(name, "gate '" + name.text + "' takes " + std::to_string(spec.params) +
                     " parameter(s), got " + std::to_string(params.size()));
    }
    std::vector<std::vector<Qubit>> args;
    args.push_back(operand());
    while (is_punct(peek(), ',')) {
      next();
      args.push_back(operand());
    }
    expect(';');
    if (args.size() != spec.qubits) {
      fail(name, "gate '" + name.text + "' takes " + std::to_string(spec.qubits) +
                     " qubit(s), got " + std::to_string(args.size()));
    }
    double p0 = params.empty() ? 0.0 : params[0];
    if (spec.qubits == 1) {
      for (Qubit q : args[0]) emit(name, make_gate(spec.kind, {q}, spec.params ? std::initializer_list<double>{p0} : std::initializer_list<double>{}));
      return;
    }
    if (args[0].size() != 1 || args[1].size() != 1) {
      fail(name, "register broadcast is only supported for single-qubit gates");
    }
    Qubit a = args[0][0], b = args[1][0];
    if (a == b) fail(name, "duplicate operand q[" + std::to_string(a) + "]");
    emit(name, make_gate(spec.kind, {a, b}, spec.params ? std::initializer_list<double>{p0} : std::initializer_list<double>{}));
  }

  void emit(const Token& at, const Gate& g) {
    if (g.kind != GateKind::MEASURE) {
      for (Qubit q : g.operands()) {
        if (measured_[q]) fail(at, "gate after measurement on qubit " + std::to_string(q));
      }
    }
    try {
      circuit_.append(g);
    } catch (const CircuitError& e) {
      fail(at, e.what());
    }
  }

  // expr := term (('+'|'-') term)*
  double expr() {
    double v = term();
    while (is_punct(peek(), '+') || is_punct(peek(), '-')) {
      bool plus = next().text == "+";
      double r = term();
      v = plus ? v + r : v - r;
    }
    return v;
  }
  double term() {
    double v = unary();
    while (is_punct(peek(), '*') || is_punct(peek(), '/')) {
      const Token& op = next();
      double r = unary();
      if (op.text == "/" && r == 0.0) fail(op, "division by zero");
      v = op.text == "*" ? v * r : v / r;
    }
    return v;
  }
  double unary() {
    if (is_punct(peek(), '-')) {
      next();
      return -unary();
    }
    if (is_punct(peek(), '+')) {
      next();
      return unary();
    }
    return primary();
  }
  double primary() {
    const Token& t = next();
    if (t.kind == Tok::Number) {
      double v = std::strtod(t.text.c_str(), nullptr);
      if (!std::isfinite(v)) fail(t, "number out of range");
      return v;
    }
    if (t.kind == Tok::Ident && t.text == "pi") return pi;
    if (is_punct(t, '(')) {
      if (++depth_ > 64) fail(t, "expression nested too deeply");
      double v = expr();
      expect(')');
      --depth_;
      return v;
    }
    fail(t, "expected expression but found " + show(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::optional<std::string> qreg_;
  std::map<std::string, std::size_t> cregs_;
  std::vector<bool> measured_;
  Circuit circuit_;
};

std::string_view qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::RX: return "rx";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::SWAP: return "swap";
    case GateKind::RZZ: return "rzz";
    default: return {};
  }
}

// Raw 64-bit draws keep generated files identical across standard libraries.
double unit_open(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(unit_open(rng) * static_cast<double>(n)) % n;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Lexer lexer(text);
  QasmParser parser(lexer.run());
  return parser.run();
}

std::string to_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits() << "];\n";
  bool any_measure = std::any_of(circuit.gates().begin(), circuit.gates().end(),
                                 [](const Gate& g) { return g.kind == GateKind::MEASURE; });
  if (any_measure) out << "creg c[" << circuit.num_qubits() << "];\n";
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::MEASURE) {
      out << "measure q[" << g.qubits[0] << "] -> c[" << g.qubits[0] << "];\n";
      continue;
    }
    std::string_view name = qasm_name(g.kind);
    if (name.empty()) {
      throw CircuitError("to_qasm: gate " + std::string(gate_name(g.kind)) +
                         " has no QASM spelling");
    }
    out << name;
    if (gate_param_count(g.kind) == 1) out << "(" << fmt(g.params[0]) << ")";
    out << " q[" << g.qubits[0] << "]";
    if (g.arity() == 2) out << ",q[" << g.qubits[1] << "]";
    out << ";\n";
  }
  return out.str();
}

PauliTermFile parse_pauli_file(std::string_view text) {
  PauliTermFile file;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string first, second, extra;
    if (!(in >> first)) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t col = line.find(first) + 1;
    if (!(in >> second)) throw ParseError(line_no, col, "expected two fields");
    if (in >> extra) throw ParseError(line_no, line.find(extra, col) + 1, "unexpected field '" + extra + "'");
    if (!have_header) {
      if (first != "qubits") throw ParseError(line_no, col, "expected 'qubits <n>' header");
      if (second.empty() || second.size() > 6 ||
          second.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line_no, line.find(second, col) + 1, "bad qubit count '" + second + "'");
      }
      file.num_qubits = std::stoul(second);
      if (file.num_qubits == 0) throw ParseError(line_no, col, "qubit count must be positive");
      have_header = true;
    } else {
      PauliTerm term;
      term.label = first;
      char* stop = nullptr;
      term.theta = std::strtod(second.c_str(), &stop);
      std::size_t theta_col = line.find(second, col + first.size()) + 1;
      if (stop == second.c_str() || *stop != '\0' || !std::isfinite(term.theta)) {
        throw ParseError(line_no, theta_col, "bad angle '" + second + "'");
      }
      try {
        validate_pauli(term, file.num_qubits);
      } catch (const CircuitError& e) {
        throw ParseError(line_no, col, e.what());
      }
      file.terms.push_back(std::move(term));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'qubits <n>' header");
  return file;
}

std::string dump_pauli_file(const PauliTermFile& file) {
  std::string out = "qubits " + std::to_string(file.num_qubits) + "\n";
  for (const PauliTerm& t : file.terms) out += t.label + " " + fmt(t.theta) + "\n";
  return out;
}

std::string_view chain_name(ChainShape chain) {
  switch (chain) {
    case ChainShape::Path: return "path";
    case ChainShape::Fountain: return "fountain";
    case ChainShape::Parallel: return "parallel";
  }
  return "path";
}

std::optional<ChainShape> parse_chain(std::string_view name) {
  if (name == "path") return ChainShape::Path;
  if (name == "fountain") return ChainShape::Fountain;
  if (name == "parallel") return ChainShape::Parallel;
  return std::nullopt;
}

Circuit gen_ghz(std::size_t n, ChainShape chain) {
  if (n < 2) throw CircuitError("gen_ghz: need at least 2 qubits");
  Circuit c(n);
  c.append(GateKind::H, {0});
  switch (chain) {
    case ChainShape::Path:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        c.append(GateKind::CX, {static_cast<Qubit>(i), static_cast<Qubit>(i + 1)});
      }
      break;
    case ChainShape::Fountain:
      for (std::size_t i = 1; i < n; ++i) c.append(GateKind::CX, {0, static_cast<Qubit>(i)});
      break;
    case ChainShape::Parallel: {
      std::size_t stride = 1;
      while (stride * 2 < n) stride *= 2;
      for (; stride >= 1; stride /= 2) {
        for (std::size_t i = 0; i + stride < n; i += 2 * stride) {
          c.append(GateKind::CX, {static_cast<Qubit>(i), static_cast<Qubit>(i + stride)});
        }
      }
      break;
    }
  }
  return c;
}

PauliTermFile gen_ucc_random(std::size_t n, std::size_t num_terms, std::uint64_t seed) {
  if (n < 2) throw CircuitError("gen_ucc_random: need at least 2 qubits");
  static constexpr char kPaulis[4] = {'I', 'X', 'Y', 'Z'};
  std::mt19937_64 rng(seed);
  PauliTermFile file;
  file.num_qubits = n;
  for (std::size_t t = 0; t < num_terms; ++t) {
    PauliTerm term;
    term.label.resize(n);
    for (std::size_t q = 0; q < n; ++q) term.label[q] = kPaulis[rng() >> 62];
    term.theta = 2.0 * pi * unit_open(rng);
    file.terms.push_back(std::move(term));
  }
  return file;
}

Graph complete_graph(std::size_t n) {
  Graph g;
  g.num_nodes = n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      g.edges.push_back({static_cast<Qubit>(a), static_cast<Qubit>(b), 1.0});
    }
  }
  return g;
}

Graph power_law_graph(std::size_t n, std::uint64_t seed, std::size_t m) {
  if (m == 0) throw CircuitError("power_law_graph: m must be positive");
  if (n <= m + 1) return complete_graph(n);
  Graph g = complete_graph(m + 1);
  g.num_nodes = n;
  // Each endpoint appears once per incident edge, so uniform draws are degree-weighted.
  std::vector<Qubit> endpoints;
  for (const WeightedEdge& e : g.edges) {
    endpoints.push_back(e.a);
    endpoints.push_back(e.b);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t v = m + 1; v < n; ++v) {
    std::set<Qubit> targets;
    while (targets.size() < m) targets.insert(endpoints[below(rng, endpoints.size())]);
    for (Qubit t : targets) {
      g.edges.push_back({t, static_cast<Qubit>(v), 1.0});
      endpoints.push_back(t);
      endpoints.push_back(static_cast<Qubit>(v));
    }
  }
  return g;
}

Circuit gen_qaoa(const Graph& graph, std::size_t p, const std::vector<double>& gammas,
                 const std::vector<double>& betas) {
  if (p == 0) throw CircuitError("gen_qaoa: need at least one layer");
  if (gammas.size() != p || betas.size() != p) {
    throw CircuitError("gen_qaoa: expected " + std::to_string(p) + " gammas and betas");
  }
  if (!graph.node_weights.empty() && graph.node_weights.size() != graph.num_nodes) {
    throw CircuitError("gen_qaoa: node weight count does not match node count");
  }
  std::set<std::pair<Qubit, Qubit>> seen;
  for (const WeightedEdge& e : graph.edges) {
    if (e.a == e.b) throw CircuitError("gen_qaoa: self-loop on node " + std::to_string(e.a));
    if (e.a >= graph.num_nodes || e.b >= graph.num_nodes) {
      throw CircuitError("gen_qaoa: edge endpoint out of range");
    }
    if (!seen.insert(std::minmax(e.a, e.b)).second) {
      throw CircuitError("gen_qaoa: duplicate edge (" + std::to_string(e.a) + "," +
                         std::to_string(e.b) + ")");
    }
  }
  Circuit c(graph.num_nodes);
  for (std::size_t q = 0; q < graph.num_nodes; ++q) c.append(GateKind::H, {static_cast<Qubit>(q)});
  for (std::size_t k = 0; k < p; ++k) {
    for (const WeightedEdge& e : graph.edges) c.append(GateKind::RZZ, {e.a, e.b}, {gammas[k] * e.weight});
    for (std::size_t q = 0; q < graph.node_weights.size(); ++q) {
      c.append(GateKind::RZ, {static_cast<Qubit>(q)}, {gammas[k] * graph.node_weights[q]});
    }
    for (std::size_t q = 0; q < graph.num_nodes; ++q) {
      c.append(GateKind::RX, {static_cast<Qubit>(q)}, {2.0 * betas[k]});
    }
  }
  for (std::size_t q = 0; q < graph.num_nodes; ++q) {
    c.append(GateKind::MEASURE, {static_cast<Qubit>(q)});
  }
  return c;
}

void qaoa_angles(std::size_t p, std::uint64_t seed, std::vector<double>& gammas,
                 std::vector<double>& betas) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  gammas.clear();
  betas.clear();
  for (std::size_t k = 0; k < p; ++k) {
    gammas.push_back(pi * unit_open(rng));
    betas.push_back(0.5 * pi * unit_open(rng));
  }
}

Circuit gen_steane_prep() {
  Circuit c(7);
  for (Qubit q : {0U, 1U, 2U, 3U}) c.append(GateKind::H, {q});
  // Each H'd qubit fans out to complete one generator of the Hamming code.
  const std::pair<Qubit, Qubit> fanout[] = {{3, 4}, {3, 5}, {3, 6}, {1, 4}, {1, 6},
                                            {0, 5}, {0, 6}, {2, 4}, {2, 5}};
  for (auto [ctl, tgt] : fanout) c.append(GateKind::CX, {ctl, tgt});
  return c;
}

std::vector<std::string> steane_stabilizers() {
  return {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"};
}

std::string_view bench_family_name(BenchFamily family) {
  switch (family) {
    case BenchFamily::Ghz: return "ghz";
    case BenchFamily::Ucc: return "ucc";
    case BenchFamily::QaoaSk: return "qaoa-sk";
    case BenchFamily::QaoaPl: return "qaoa-pl";
    case BenchFamily::Po: return "po";
  }
  return "ghz";
}

BenchmarkSpec parse_bench_spec(std::string_view text, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = text.find(':', start);
    parts.emplace_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  auto column_of = [&](std::size_t part) {
    std::size_t col = 1;
    for (std::size_t i = 0; i < part && i < parts.size(); ++i) col += parts[i].size() + 1;
    return col;
  };
  auto number = [&](std::size_t part, const char* what) -> std::size_t {
    const std::string& s = parts[part];
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(1, column_of(part), std::string("bad ") + what + " '" + s + "'");
    }
    return std::stoul(s);
  };
  if (parts.size() != 3) {
    throw ParseError(1, 1, "benchmark spec must be family:<n>:<param>, got '" + std::string(text) + "'");
  }
  BenchmarkSpec spec;
  spec.seed = seed;
  const std::string& fam = parts[0];
  if (fam == "ghz") {
    spec.family = BenchFamily::Ghz;
  } else if (fam == "ucc") {
    spec.family = BenchFamily::Ucc;
  } else if (fam == "qaoa-sk") {
    spec.family = BenchFamily::QaoaSk;
  } else if (fam == "qaoa-pl") {
    spec.family = BenchFamily::QaoaPl;
  } else if (fam == "po") {
    spec.family = BenchFamily::Po;
  } else {
    throw ParseError(1, 1, "unknown benchmark family '" + fam + "'");
  }
  spec.num_qubits = number(1, "qubit count");
  if (spec.num_qubits < 2) throw ParseError(1, column_of(1), "benchmark needs at least 2 qubits");
  if (spec.family == BenchFamily::Ghz) {
    auto chain = parse_chain(parts[2]);
    if (!chain) throw ParseError(1, column_of(2), "unknown chain shape '" + parts[2] + "'");
    spec.chain = *chain;
  } else if (spec.family == BenchFamily::Ucc) {
    spec.num_terms = number(2, "term count");
  } else {
    spec.layers = number(2, "layer count");
    if (spec.layers == 0) throw ParseError(1, column_of(2), "layer count must be at least 1");
  }
  return spec;
}

}  // namespace zonec
