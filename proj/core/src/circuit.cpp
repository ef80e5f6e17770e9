// Copyright 2026 The tpar developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tpar/circuit.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tpar {

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::Cnot:
      return 2;
    case GateKind::Toffoli:
      return 3;
    default:
      return 1;
  }
}

std::string_view gate_mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "X";
    case GateKind::Y:
      return "Y";
    case GateKind::Z:
      return "Z";
    case GateKind::H:
      return "H";
    case GateKind::P:
      return "P";
    case GateKind::Pdg:
      return "P*";
    case GateKind::T:
      return "T";
    case GateKind::Tdg:
      return "T*";
    case GateKind::Cnot:
    case GateKind::Toffoli:
      return "tof";
  }
  return "?";
}

bool Gate::acts_on(int wire) const {
  for (int i = 0; i < arity(); ++i)
    if (wires[static_cast<std::size_t>(i)] == wire) return true;
  return false;
}

void Circuit::append(Gate g) {
  for (int i = 0; i < g.arity(); ++i) {
    int w = g.wires[static_cast<std::size_t>(i)];
    if (w < 0 || w >= num_wires()) throw std::invalid_argument("gate wire out of range");
    for (int j = i + 1; j < g.arity(); ++j)
      if (g.wires[static_cast<std::size_t>(j)] == w)
        throw std::invalid_argument("gate wires must be distinct");
  }
  gates.push_back(g);
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

const std::unordered_map<std::string, GateKind>& mnemonic_table() {
  static const std::unordered_map<std::string, GateKind> table = {
      {"X", GateKind::X}, {"Y", GateKind::Y},   {"Z", GateKind::Z},
      {"H", GateKind::H}, {"P", GateKind::P},   {"P*", GateKind::Pdg},
      {"T", GateKind::T}, {"T*", GateKind::Tdg}};
  return table;
}

}  // namespace

Circuit parse_qc(std::string_view text) {
  std::vector<std::string> decl_wires;
  std::vector<std::string> decl_inputs;
  bool saw_v = false, saw_i = false, in_body = false, saw_end = false;
  struct RawGate {
    std::string mnemonic;
    std::vector<std::string> args;
    int line;
  };
  std::vector<RawGate> raw_gates;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    if (tokens[0] == ".v") {
      if (saw_v) throw ParseError(line_no, "duplicate .v line");
      saw_v = true;
      decl_wires.assign(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == ".i") {
      if (saw_i) throw ParseError(line_no, "duplicate .i line");
      saw_i = true;
      decl_inputs.assign(tokens.begin() + 1, tokens.end());
    } else if (tokens[0] == ".o") {
      // accepted for compatibility; outputs are not modeled
    } else if (tokens[0] == "BEGIN") {
      if (!saw_v) throw ParseError(line_no, "BEGIN before .v declaration");
      in_body = true;
    } else if (tokens[0] == "END") {
      if (!in_body) throw ParseError(line_no, "END outside of circuit body");
      in_body = false;
      saw_end = true;
    } else if (in_body) {
      raw_gates.push_back({tokens[0], {tokens.begin() + 1, tokens.end()}, line_no});
    } else {
      throw ParseError(line_no, "unexpected token '" + tokens[0] + "' outside of BEGIN/END");
    }
    if (pos > text.size()) break;
  }
  if (!saw_v) throw ParseError(line_no, "missing .v declaration");
  if (!saw_end) throw ParseError(line_no, "missing END");

  std::unordered_set<std::string> seen;
  for (const auto& w : decl_wires)
    if (!seen.insert(w).second) throw ParseError(1, "duplicate wire name '" + w + "'");
  std::unordered_set<std::string> inputs;
  for (const auto& w : decl_inputs) {
    if (!seen.count(w)) throw ParseError(1, "input '" + w + "' not declared in .v");
    if (!inputs.insert(w).second) throw ParseError(1, "duplicate input '" + w + "'");
  }

  // Inputs first (in .v order), then ancillae.
  Circuit c;
  for (const auto& w : decl_wires)
    if (inputs.count(w)) c.wire_names.push_back(w);
  c.num_inputs = static_cast<int>(c.wire_names.size());
  for (const auto& w : decl_wires)
    if (!inputs.count(w)) c.wire_names.push_back(w);

  std::unordered_map<std::string, int> index;
  for (int i = 0; i < c.num_wires(); ++i) index[c.wire_names[static_cast<std::size_t>(i)]] = i;

  for (const auto& rg : raw_gates) {
    std::vector<int> wires;
    for (const auto& name : rg.args) {
      auto it = index.find(name);
      if (it == index.end()) throw ParseError(rg.line, "undeclared wire '" + name + "'");
      wires.push_back(it->second);
    }
    Gate g;
    if (rg.mnemonic == "tof") {
      if (wires.size() == 2)
        g = Gate::cnot(wires[0], wires[1]);
      else if (wires.size() == 3)
        g = Gate::toffoli(wires[0], wires[1], wires[2]);
      else
        throw ParseError(rg.line, "tof expects 2 or 3 wires");
    } else {
      auto it = mnemonic_table().find(rg.mnemonic);
      if (it == mnemonic_table().end())
        throw ParseError(rg.line, "unknown gate mnemonic '" + rg.mnemonic + "'");
      if (wires.size() != 1)
        throw ParseError(rg.line, rg.mnemonic + " expects exactly 1 wire");
      g = Gate::single(it->second, wires[0]);
    }
    try {
      c.append(g);
    } catch (const std::invalid_argument& e) {
      throw ParseError(rg.line, e.what());
    }
  }
  return c;
}

std::string write_qc(const Circuit& c) {
  std::ostringstream out;
  out << ".v";
  for (const auto& w : c.wire_names) out << ' ' << w;
  out << "\n.i";
  for (int i = 0; i < c.num_inputs; ++i) out << ' ' << c.wire_names[static_cast<std::size_t>(i)];
  out << "\nBEGIN\n";
  for (const auto& g : c.gates) {
    out << gate_mnemonic(g.kind);
    for (int i = 0; i < g.arity(); ++i)
      out << ' ' << c.wire_names[static_cast<std::size_t>(g.wires[static_cast<std::size_t>(i)])];
    out << '\n';
  }
  out << "END\n";
  return out.str();
}

namespace {

int layered_depth(const Circuit& c, bool t_layers_only) {
  std::vector<int> depth(static_cast<std::size_t>(c.num_wires()), 0);
  int max_depth = 0;
  for (const auto& g : c.gates) {
    int d = 0;
    for (int i = 0; i < g.arity(); ++i)
      d = std::max(d, depth[static_cast<std::size_t>(g.wires[static_cast<std::size_t>(i)])]);
    if (t_layers_only) {
      if (g.kind == GateKind::T || g.kind == GateKind::Tdg)
        d += 1;
      else if (g.kind == GateKind::Toffoli)
        d += 3;
    } else {
      d += 1;
    }
    for (int i = 0; i < g.arity(); ++i)
      depth[static_cast<std::size_t>(g.wires[static_cast<std::size_t>(i)])] = d;
    max_depth = std::max(max_depth, d);
  }
  return max_depth;
}

}  // namespace

int t_depth(const Circuit& c) { return layered_depth(c, true); }

std::vector<Gate> ccz_gates(int a, int b, int c) {
  return {Gate::tdg(a),     Gate::tdg(b),     Gate::cnot(c, a), Gate::cnot(b, c),
          Gate::t(a),       Gate::t(c),       Gate::cnot(b, a), Gate::cnot(b, c),
          Gate::tdg(a),     Gate::cnot(c, a), Gate::t(a),       Gate::tdg(c),
          Gate::cnot(b, a)};
}

Circuit expand(const Circuit& c) {
  Circuit out;
  out.wire_names = c.wire_names;
  out.num_inputs = c.num_inputs;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Toffoli) {
      out.gates.push_back(Gate::h(g.wires[2]));
      auto body = ccz_gates(g.wires[0], g.wires[1], g.wires[2]);
      out.gates.insert(out.gates.end(), body.begin(), body.end());
      out.gates.push_back(Gate::h(g.wires[2]));
    } else {
      out.gates.push_back(g);
    }
  }
  return out;
}

Metrics metrics(const Circuit& c) {
  Metrics m;
  m.qubits = c.num_wires();
  m.ancillae = c.num_wires() - c.num_inputs;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::T:
      case GateKind::Tdg:
        m.t_count += 1;
        break;
      case GateKind::Cnot:
        m.cnot_count += 1;
        break;
      case GateKind::H:
        m.h_count += 1;
        break;
      case GateKind::Toffoli:
        m.t_count += 7;
        m.cnot_count += 6;
        m.h_count += 2;
        break;
      default:
        m.other_count += 1;
        break;
    }
  }
  m.t_depth = t_depth(c);
  m.total_depth = layered_depth(c, false);
  return m;
}

namespace {

bool inverse_kinds(GateKind a, GateKind b) {
  switch (a) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::Cnot:
    case GateKind::Toffoli:
      return a == b;
    case GateKind::T:
      return b == GateKind::Tdg;
    case GateKind::Tdg:
      return b == GateKind::T;
    case GateKind::P:
      return b == GateKind::Pdg;
    case GateKind::Pdg:
      return b == GateKind::P;
  }
  return false;
}

enum class WireRelation { disjoint, overlap, equal };

WireRelation relate(const Gate& a, const Gate& b) {
  if (a.arity() == b.arity()) {
    bool same = true;
    for (int i = 0; i < a.arity(); ++i)
      same &= a.wires[static_cast<std::size_t>(i)] == b.wires[static_cast<std::size_t>(i)];
    if (same) return WireRelation::equal;
  }
  for (int i = 0; i < a.arity(); ++i)
    if (b.acts_on(a.wires[static_cast<std::size_t>(i)])) return WireRelation::overlap;
  return WireRelation::disjoint;
}

}  // namespace

Circuit cancel_inverse_pairs(const Circuit& c) {
  Circuit out = c;
  auto& gates = out.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<bool> dead(gates.size(), false);
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (dead[i]) continue;
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (dead[j]) continue;
        WireRelation rel = relate(gates[i], gates[j]);
        if (rel == WireRelation::disjoint) continue;
        if (rel == WireRelation::equal && inverse_kinds(gates[i].kind, gates[j].kind)) {
          dead[i] = dead[j] = true;
          changed = true;
        }
        break;  // blocked by the first overlapping gate either way
      }
    }
    if (changed) {
      std::vector<Gate> next;
      next.reserve(gates.size());
      for (std::size_t i = 0; i < gates.size(); ++i)
        if (!dead[i]) next.push_back(gates[i]);
      gates = std::move(next);
    }
  }
  return out;
}

}  // namespace tpar
