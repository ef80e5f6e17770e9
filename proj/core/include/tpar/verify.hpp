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

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tpar/circuit.hpp"
#include "tpar/matroid.hpp"
#include "tpar/phase_poly.hpp"

namespace tpar {

enum class Verdict { equal, equal_up_to_global_phase, different };

std::string_view to_string(Verdict v);

struct EquivalenceReport {
  Verdict verdict = Verdict::equal;
  /// A variable assignment exhibiting the difference (inputs followed by
  /// path variables for summary checks, basis input for unitary checks).
  /// Present iff verdict == different.
  std::optional<std::string> witness;
  double max_amplitude_error = 0.0;
  std::string note;

  bool ok() const { return verdict != Verdict::different; }
};

/// Compares the <S, Q, H> summaries of two circuits after Toffoli expansion
/// and inverse-pair cancellation: term sets, the per-event targets and
/// destroyed states (path variables matched by event order) and the final
/// states must agree; wires beyond the smaller circuit must carry the
/// constant-0 state. Sound but incomplete: circuits with different
/// Hadamard skeletons compare as different.
EquivalenceReport check_summary(const Circuit& a, const Circuit& b);

/// Dense statevector comparison on all basis inputs, up to one global
/// phase, within 1e-9 amplitude error. Extra wires of the wider circuit
/// must enter and leave in |0>. Throws when either circuit exceeds
/// max_wires.
EquivalenceReport check_unitary(const Circuit& a, const Circuit& b, int max_wires = 10);

/// Exact minimum number of independent blocks over all set partitions
/// (Bell-number enumeration; |terms| <= 9).
int brute_force_min_partition(std::span<const PhaseTerm> terms, const Oracle& oracle);

/// Applies the circuit to the given basis state (data wires from `input`,
/// ancillae |0>) and returns the 2^wires amplitude vector.
std::vector<std::complex<double>> simulate_statevector(const Circuit& c,
                                                       const std::vector<bool>& input);

}  // namespace tpar
