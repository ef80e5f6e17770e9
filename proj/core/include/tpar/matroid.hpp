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

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "tpar/gf2.hpp"
#include "tpar/phase_poly.hpp"

namespace tpar {

/// Independence oracle for phase-term sets: a set A is independent iff
/// dim_v - rank(A) <= wires - |A|, i.e. A extends to a full reversible
/// output assignment on `wires` qubits over a dim_v-dimensional input
/// space. An effectively infinite wire budget makes every set independent.
struct Oracle {
  std::size_t dim_v = 0;
  std::size_t wires = 0;

  static constexpr std::size_t kUnboundedWires = std::numeric_limits<std::size_t>::max() / 2;

  bool is_independent(std::span<const PhaseTerm> block) const;
  /// rank(A) supplied by the caller when already known.
  bool is_independent_with_rank(std::size_t block_size, std::size_t block_rank) const {
    return dim_v + block_size <= wires + block_rank;
  }
};

/// An ordered list of disjoint term blocks, each independent under the
/// oracle that built it.
struct Partition {
  std::vector<std::vector<PhaseTerm>> blocks;

  std::size_t num_elements() const;
  bool contains_mask(const XorFunc& mask) const;
};

/// Adds one term to a minimal partition, keeping it minimal: breadth-first
/// search for an augmenting path through the implicit exchange graph, with
/// a new singleton block when no path exists. First-fit tie-breaking: FIFO
/// queue order, blocks in list order, block elements in insertion order.
void partition_add(const PhaseTerm& s, Partition& p, const Oracle& oracle);

/// Partitions a whole term list by iterated partition_add, in order.
Partition partition_all(std::span<const PhaseTerm> terms, const Oracle& oracle);

/// After the input-space dimension grows by one, drops one linearly
/// dependent element from each block that stopped being independent and
/// returns the dropped terms for re-partitioning. The surviving partition
/// is minimal for the retained elements.
std::vector<PhaseTerm> repair_on_dim_increase(Partition& p, const Oracle& grown);

}  // namespace tpar
