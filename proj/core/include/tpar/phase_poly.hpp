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

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tpar/circuit.hpp"
#include "tpar/gf2.hpp"

namespace tpar {

/// One phase factor: the circuit applies w^(coeff * func(x)) with w the
/// eighth root of unity. Coefficients live in Z8; stored terms always have
/// coeff in 1..7, parity 0 and a nonzero mask.
struct PhaseTerm {
  std::uint8_t coeff;
  XorFunc func;

  bool odd() const { return coeff & 1; }
  bool operator==(const PhaseTerm&) const = default;
};

/// Phase terms keyed by mask, in first-insertion order. Merging adds
/// coefficients mod 8 and deletes terms that reach zero. A term with parity
/// 1 is normalized to (8 - c) on the parity-0 mask; the residual constant
/// phase is discarded, as are constant (zero-mask) terms.
class TermSet {
 public:
  void merge(int coeff, XorFunc func);

  const std::vector<PhaseTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool operator==(const TermSet& other) const { return terms_ == other.terms_; }

 private:
  void reindex();
  std::vector<PhaseTerm> terms_;
  std::unordered_map<XorFunc, std::size_t, XorFuncMaskHash, XorFuncMaskEq> index_;
};

/// A Hadamard gate in the summary: the wire it acts on, the fresh path
/// variable it introduces, and snapshots of every wire state before/after.
struct HadamardEvent {
  int target;
  int path_var;
  std::vector<XorFunc> q_in;
  std::vector<XorFunc> q_out;
};

/// The <S, Q, H> description of a circuit: merged phase terms, the current
/// linear state of each wire, and the ordered Hadamard events. Masks range
/// over the m input variables followed by the path variables; the i-th
/// Hadamard introduces variable m + i.
struct CircuitSummary {
  TermSet terms;
  std::vector<XorFunc> q;
  std::vector<HadamardEvent> events;
  int n = 0;  // wires
  int m = 0;  // inputs

  int k() const { return static_cast<int>(events.size()); }
  /// Allocated variable width (inputs plus path-variable capacity).
  int width() const { return q.empty() ? m : static_cast<int>(q[0].width()); }
};

/// Builds a summary with no gates folded yet: wire i < m starts as x_i,
/// the rest as the constant-0 function. Masks are allocated with room for
/// `max_events` path variables.
CircuitSummary initial_summary(int wires, int inputs, int max_events);

/// Folds the gate semantics of Fig-style update rules onto the summary:
/// phase gates merge a term on the wire's current state, X flips parity,
/// CNOT xors the control state into the target, H snapshots the states and
/// allocates the next path variable. Throws on Toffoli.
void fold_gates(const std::vector<Gate>& gates, CircuitSummary& summary);

/// summarize = initial_summary + fold_gates over the whole circuit.
/// The circuit must be Toffoli-free (expand first).
CircuitSummary summarize(const Circuit& c);

/// Removes Hadamard pairs that act as the identity: two successive events
/// on one wire whose first path variable is never phased, never copied and
/// reaches the second event unchanged. The pair's interference then pins
/// the second path variable to the state before the pair, which is
/// substituted through the rest of the summary; surviving path variables
/// are renumbered compactly. Returns the number of pairs removed.
int prune_trivial_hadamard_pairs(CircuitSummary& summary);

struct SimulationResult {
  std::uint8_t phase_exponent;  // power of w = e^{i pi/4}
  std::vector<bool> output;

  bool operator==(const SimulationResult&) const = default;
};

/// Classical basis-state simulation of a {CNOT, T-power, X} circuit in
/// O(gates * n) time. Throws if the circuit contains H, Y or Toffoli.
SimulationResult simulate_cnot_t(const Circuit& c, const std::vector<bool>& input);

}  // namespace tpar
