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

#include "tpar/matroid.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace tpar {

bool Oracle::is_independent(std::span<const PhaseTerm> block) const {
  if (dim_v + block.size() <= wires) return true;  // rank bound can't fail
  Echelon e;
  for (const auto& t : block) e.insert(t.func);
  return is_independent_with_rank(block.size(), e.rank());
}

std::size_t Partition::num_elements() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

bool Partition::contains_mask(const XorFunc& mask) const {
  for (const auto& b : blocks)
    for (const auto& t : b)
      if (t.func.mask_equal(mask)) return true;
  return false;
}

namespace {

using MaskSet = std::unordered_set<XorFunc, XorFuncMaskHash, XorFuncMaskEq>;

// One BFS node: a candidate element to re-home, plus the chain of
// displacements that placing it would trigger.
struct PathNode {
  PhaseTerm term;
  int home_block;  // -1 for the inserted element
  int parent;      // index into the node arena, -1 at the chain end
};

bool block_plus_minus_independent(const std::vector<PhaseTerm>& block, const PhaseTerm& added,
                                  std::size_t skip_index, const Oracle& oracle) {
  Echelon e;
  std::size_t size = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i == skip_index) continue;
    e.insert(block[i].func);
    ++size;
  }
  e.insert(added.func);
  ++size;
  return oracle.is_independent_with_rank(size, e.rank());
}

void validate_block(const std::vector<PhaseTerm>& block, const Oracle& oracle) {
  if (!oracle.is_independent(block))
    throw std::logic_error("matroid partition invariant breached: dependent block");
}

}  // namespace

void partition_add(const PhaseTerm& s, Partition& p, const Oracle& oracle) {
  std::vector<PathNode> arena;
  std::deque<std::size_t> queue;
  MaskSet marked;

  arena.push_back({s, -1, -1});
  queue.push_back(0);
  marked.insert(s.func);

  auto apply_path = [&](std::size_t node_idx, std::size_t into_block) {
    p.blocks[into_block].push_back(arena[node_idx].term);
    std::vector<std::size_t> touched{into_block};
    // walk the displacement chain: each hop leaves its home block and is
    // replaced there by its parent
    for (int cur = static_cast<int>(node_idx); arena[static_cast<std::size_t>(cur)].parent >= 0;
         cur = arena[static_cast<std::size_t>(cur)].parent) {
      const PathNode& node = arena[static_cast<std::size_t>(cur)];
      auto& home = p.blocks[static_cast<std::size_t>(node.home_block)];
      bool replaced = false;
      for (auto& t : home) {
        if (t.func.mask_equal(node.term.func)) {
          t = arena[static_cast<std::size_t>(node.parent)].term;
          replaced = true;
          break;
        }
      }
      if (!replaced) throw std::logic_error("augmenting path element missing from its block");
      touched.push_back(static_cast<std::size_t>(node.home_block));
    }
    for (auto b : touched) validate_block(p.blocks[b], oracle);
  };

  while (!queue.empty()) {
    const std::size_t node_idx = queue.front();
    queue.pop_front();
    // copy: arena may reallocate while enqueueing
    const PathNode node = arena[node_idx];

    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      if (static_cast<int>(b) == node.home_block) continue;
      auto& block = p.blocks[b];
      if (block_plus_minus_independent(block, node.term, block.size(), oracle)) {
        apply_path(node_idx, b);
        return;
      }
      for (std::size_t u = 0; u < block.size(); ++u) {
        if (marked.count(block[u].func)) continue;
        if (block_plus_minus_independent(block, node.term, u, oracle)) {
          arena.push_back({block[u], static_cast<int>(b), static_cast<int>(node_idx)});
          queue.push_back(arena.size() - 1);
          marked.insert(block[u].func);
        }
      }
    }
  }

  // no augmenting path: open a new block
  p.blocks.push_back({s});
}

Partition partition_all(std::span<const PhaseTerm> terms, const Oracle& oracle) {
  Partition p;
  for (const auto& t : terms) partition_add(t, p, oracle);
  return p;
}

std::vector<PhaseTerm> repair_on_dim_increase(Partition& p, const Oracle& grown) {
  std::vector<PhaseTerm> evicted;
  for (auto& block : p.blocks) {
    if (grown.is_independent(block)) continue;
    std::vector<XorFunc> masks;
    masks.reserve(block.size());
    for (const auto& t : block) masks.push_back(t.func);
    std::size_t idx = find_dependent_index(masks);
    evicted.push_back(block[idx]);
    block.erase(block.begin() + static_cast<std::ptrdiff_t>(idx));
    validate_block(block, grown);
  }
  return evicted;
}

}  // namespace tpar
