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

#include "tpar/circuit.hpp"

namespace tpar::test {

inline Circuit four_wire_circuit() {
  Circuit c;
  c.wire_names = {"x1", "x2", "x3", "x4"};
  c.num_inputs = 4;
  return c;
}

/// 12-gate {CNOT, T} circuit whose four T-type gates cancel down to a
/// single P: two T's meet on the state x1 with opposite signs, two more
/// meet on x3+x4.
inline Circuit cancellation_demo_circuit() {
  Circuit c = four_wire_circuit();
  c.append(Gate::cnot(2, 3));
  c.append(Gate::t(0));
  c.append(Gate::t(3));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::cnot(2, 3));
  c.append(Gate::cnot(1, 2));
  c.append(Gate::cnot(1, 0));
  c.append(Gate::cnot(3, 2));
  c.append(Gate::cnot(1, 2));
  c.append(Gate::t(2));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::tdg(1));
  return c;
}

/// Hand-optimized form of cancellation_demo_circuit: the same linear map
/// with the surviving phase applied as one P gate.
inline Circuit cancellation_demo_optimized() {
  Circuit c = four_wire_circuit();
  c.append(Gate::cnot(2, 3));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::cnot(2, 3));
  c.append(Gate::cnot(1, 2));
  c.append(Gate::cnot(1, 0));
  c.append(Gate::cnot(3, 2));
  c.append(Gate::cnot(1, 2));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::p(2));
  return c;
}

/// Doubly-controlled Z on (w0, w1, w2) in two T-stages, using one |0>
/// ancilla (w3): 7 T-type gates, 10 CNOTs.
inline Circuit ccz_one_ancilla_circuit() {
  Circuit c;
  c.wire_names = {"x1", "x2", "x3", "anc"};
  c.num_inputs = 3;
  c.append(Gate::cnot(0, 2));
  c.append(Gate::cnot(2, 3));
  c.append(Gate::cnot(1, 3));
  c.append(Gate::tdg(0));
  c.append(Gate::tdg(1));
  c.append(Gate::t(2));
  c.append(Gate::tdg(3));
  c.append(Gate::cnot(1, 3));
  c.append(Gate::cnot(2, 3));
  c.append(Gate::cnot(0, 2));
  c.append(Gate::cnot(1, 0));
  c.append(Gate::cnot(2, 1));
  c.append(Gate::t(0));
  c.append(Gate::t(1));
  c.append(Gate::tdg(2));
  c.append(Gate::cnot(2, 1));
  c.append(Gate::cnot(1, 0));
  return c;
}

/// Two overlapping Toffolis: (c1, c2 -> t1) then (c2, t1 -> t2) on four
/// wires. 14 T-type gates and six T-stages before optimization.
inline Circuit two_toffoli_circuit() {
  Circuit c = four_wire_circuit();
  c.append(Gate::toffoli(0, 1, 2));
  c.append(Gate::toffoli(1, 2, 3));
  return c;
}

}  // namespace tpar::test
