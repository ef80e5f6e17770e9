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

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tpar {

enum class GateKind : std::uint8_t { X, Y, Z, H, P, Pdg, T, Tdg, Cnot, Toffoli };

/// Number of wires a gate kind acts on.
int gate_arity(GateKind kind);
/// `.qc` mnemonic ("P*", "tof", ...).
std::string_view gate_mnemonic(GateKind kind);

/// A gate instance: controls first, target last. Wires are circuit indices.
struct Gate {
  GateKind kind;
  std::array<int, 3> wires{-1, -1, -1};

  static Gate single(GateKind kind, int wire) { return {kind, {wire, -1, -1}}; }
  static Gate x(int w) { return single(GateKind::X, w); }
  static Gate y(int w) { return single(GateKind::Y, w); }
  static Gate z(int w) { return single(GateKind::Z, w); }
  static Gate h(int w) { return single(GateKind::H, w); }
  static Gate p(int w) { return single(GateKind::P, w); }
  static Gate pdg(int w) { return single(GateKind::Pdg, w); }
  static Gate t(int w) { return single(GateKind::T, w); }
  static Gate tdg(int w) { return single(GateKind::Tdg, w); }
  static Gate cnot(int control, int target) { return {GateKind::Cnot, {control, target, -1}}; }
  static Gate toffoli(int c1, int c2, int target) { return {GateKind::Toffoli, {c1, c2, target}}; }

  int arity() const { return gate_arity(kind); }
  int target() const { return wires[static_cast<std::size_t>(arity() - 1)]; }
  bool acts_on(int wire) const;
  bool operator==(const Gate&) const = default;
};

/// A gate list over named wires. The first `num_inputs` wires are the
/// primary (data) wires; the rest are ancillae assumed initialized to |0>.
struct Circuit {
  std::vector<std::string> wire_names;
  int num_inputs = 0;
  std::vector<Gate> gates;

  int num_wires() const { return static_cast<int>(wire_names.size()); }
  void append(Gate g);
  bool operator==(const Circuit&) const = default;
};

struct Metrics {
  int t_count = 0;
  int t_depth = 0;
  int cnot_count = 0;
  int h_count = 0;
  int other_count = 0;
  int total_depth = 0;
  int qubits = 0;
  int ancillae = 0;

  bool operator==(const Metrics&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the `.qc` dialect: `.v` declares all wires (order = index), `.i`
/// the primary inputs, optional `.o` is accepted and ignored; gates sit
/// between BEGIN and END, one per line; `#` starts a comment. Wires are
/// reordered so that the declared inputs come first.
Circuit parse_qc(std::string_view text);

/// Canonical text form; parse_qc(write_qc(c)) == c.
std::string write_qc(const Circuit& c);

/// Number of T-stages under greedy as-soon-as-possible layering of the gate
/// list. An unexpanded Toffoli occupies three T-stages.
int t_depth(const Circuit& c);

/// Replaces each Toffoli with H(target) . ccZ(controls, target) . H(target),
/// using the 7-T ccZ gate list (see ccz_gates). Other gates are copied.
Circuit expand(const Circuit& c);

/// Gate counts and depths. Unexpanded Toffolis contribute the counts of
/// their expansion (7 T, 6 CNOT, 2 H) and three T-stages, so figures for
/// Toffoli-level and expanded circuits agree.
Metrics metrics(const Circuit& c);

/// Removes pairs of mutually-inverse gates on identical wires, looking past
/// intervening gates on disjoint wires, until a fixpoint. Preserves the
/// circuit unitary exactly.
Circuit cancel_inverse_pairs(const Circuit& c);

/// The 13-gate doubly-controlled-Z over {CNOT, T}: 7 T-type and 6 CNOT
/// gates on wires (a, b, c), leaving all wire states unchanged.
std::vector<Gate> ccz_gates(int a, int b, int c);

}  // namespace tpar
