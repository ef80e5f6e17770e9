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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tpar/circuit.hpp"
#include "tpar/gf2.hpp"
#include "tpar/phase_poly.hpp"

namespace tpar {

/// One block to synthesize: apply the block's phases starting and ending in
/// the wire states q_in/q_out, with an optional trailing Hadamard. When no
/// Hadamard is present, q_out must equal q_in.
struct SynthesisRequest {
  std::vector<PhaseTerm> block;
  std::vector<XorFunc> q_in;
  std::vector<XorFunc> q_out;
  std::optional<std::pair<int, int>> hadamard;  // (wire, path_var)
};

/// Extends the block's masks to a full wire assignment: the block masks in
/// order, then q_in rows outside the block's span until rank(q_in) is
/// reached, then zero rows. Throws if the block is not computable over
/// span(q_in) within q_in.size() wires.
std::vector<XorFunc> extend_to_basis(std::span<const PhaseTerm> block,
                                     std::span<const XorFunc> q_in);

/// A {CNOT, X} stage mapping wire states `from` to wire states `to` (both
/// lists indexed by wire). Requires equal spans; throws otherwise.
std::vector<Gate> linear_stage(std::span<const XorFunc> from, std::span<const XorFunc> to);

/// Phase gates realizing each term's coefficient, term i on wire i:
/// 1 -> T, 2 -> P, 3 -> P T, 4 -> Z, 5 -> Z T, 6 -> P*, 7 -> T*.
std::vector<Gate> phase_stage(std::span<const PhaseTerm> block);

/// Compute-phases-uncompute for one block: C1 maps q_in to the extended
/// basis, C2 applies the phase gates in one T-layer, C3 = C1 reversed, then
/// the optional Hadamard. The result's wires are named w0..w{n-1}.
Circuit synthesize_block(const SynthesisRequest& request);

/// Gate-list form of synthesize_block for callers assembling a larger
/// circuit.
std::vector<Gate> synthesize_block_gates(const SynthesisRequest& request);

}  // namespace tpar
