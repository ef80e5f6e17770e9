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
#include "tpar/phase_poly.hpp"

namespace tpar {

/// How many helper wires the re-synthesis may use beyond the circuit's own.
/// fixed(0) reproduces the in-place mode; unbounded grows wires on demand
/// so any candidate block stays independent.
struct AncillaPolicy {
  enum class Kind { fixed, unbounded };
  Kind kind = Kind::fixed;
  int count = 0;

  static AncillaPolicy fixed(int h) { return {Kind::fixed, h}; }
  static AncillaPolicy unbounded() { return {Kind::unbounded, 0}; }
};

struct OptimizeOptions {
  AncillaPolicy ancillae = AncillaPolicy::fixed(0);
  /// Partition odd- and even-coefficient terms separately (the T-carrying
  /// and Clifford-only phases). On by default: Clifford phases otherwise
  /// consume T-block capacity and flush T gates early, costing T-depth.
  bool split_parity = true;
};

struct OptimizeResult {
  Circuit circuit;
  Metrics before;
  Metrics after;
};

/// Effective wire count the optimizer starts from under a policy. The
/// unbounded policy starts at the circuit's own width and grows lazily.
int plan_ancillae(const CircuitSummary& summary, const AncillaPolicy& policy);

/// Re-synthesizes the circuit with merged phases and matroid-partitioned
/// T-stages. Toffolis are expanded and adjacent inverse pairs cancelled
/// before the summary is taken. The output uses the same wires (plus any
/// ancillae granted by the policy, all returned to |0>) and preserves the
/// circuit's summary; `before` is measured on the circuit as given.
OptimizeResult optimize(const Circuit& c, const OptimizeOptions& options = {});

}  // namespace tpar
