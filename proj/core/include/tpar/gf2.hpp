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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tpar {

/// A linear Boolean function with an affine offset: parity ⊕ (mask · x).
/// The mask is a bit-packed row vector over the circuit variables; bit i is
/// set iff variable x_i appears in the function. The all-zero mask with
/// parity 0 is the constant-0 function.
class XorFunc {
 public:
  XorFunc() = default;
  explicit XorFunc(std::size_t width) : width_(width), words_(word_count(width), 0) {}

  static XorFunc unit(std::size_t width, std::size_t var) {
    XorFunc f(width);
    f.set(var);
    return f;
  }

  std::size_t width() const { return width_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool parity() const { return parity_; }
  void set_parity(bool b) { parity_ = b; }
  void flip_parity() { parity_ = !parity_; }

  /// XORs mask and parity (the effect of a CNOT on wire states).
  XorFunc& operator^=(const XorFunc& other);

  bool mask_zero() const;
  /// Index of the lowest set mask bit, or -1 for the zero mask.
  int lowest_set() const;
  std::size_t popcount() const;

  bool mask_equal(const XorFunc& other) const { return words_ == other.words_; }
  bool operator==(const XorFunc& other) const {
    return parity_ == other.parity_ && words_ == other.words_;
  }

  /// Appends zero columns; existing variables keep their indices.
  void widen(std::size_t new_width);

  std::uint64_t mask_hash() const;

 private:
  static std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
  bool parity_ = false;
};

struct XorFuncMaskHash {
  std::size_t operator()(const XorFunc& f) const { return f.mask_hash(); }
};
struct XorFuncMaskEq {
  bool operator()(const XorFunc& a, const XorFunc& b) const { return a.mask_equal(b); }
};

/// A recorded elementary row operation. Replaying the operations on the
/// input rows reproduces the elimination result. `add_row` corresponds to a
/// CNOT (source into target) and `flip_parity` to an X gate on the target.
struct RowOp {
  enum class Kind { add_row, flip_parity };
  Kind kind;
  int source;
  int target;

  static RowOp add(int source, int target) { return {Kind::add_row, source, target}; }
  static RowOp flip(int target) { return {Kind::flip_parity, target, target}; }
};

/// Nonzero rows of a reduced row-echelon form, pivot columns ascending.
struct Basis {
  std::vector<XorFunc> rows;
  std::vector<int> pivots;

  std::size_t rank() const { return rows.size(); }
  bool operator==(const Basis& other) const = default;
};

/// Incremental row-echelon accumulator over masks (parities ignored).
class Echelon {
 public:
  /// Reduces f against the stored rows; inserts the residue if nonzero.
  /// Returns true iff the rank grew.
  bool insert(XorFunc f);
  /// True iff f's mask lies in the span of the inserted masks.
  bool contains(XorFunc f) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(XorFunc& f) const;
  std::vector<XorFunc> rows_;  // ascending pivot order
  std::vector<int> pivots_;
};

/// Rank of the span of the masks (parity bits ignored). All rows must share
/// one width.
std::size_t rank(std::span<const XorFunc> rows);

/// True iff f's mask is an F2 combination of the basis masks.
bool in_span(const XorFunc& f, std::span<const XorFunc> basis);

/// Full Gauss-Jordan elimination with recorded row operations. The result
/// places pivot rows first in ascending pivot order, zero rows after, and
/// zeroes every parity bit. Replaying the ops on the input reproduces it.
std::pair<Basis, std::vector<RowOp>> eliminate_with_ops(std::vector<XorFunc> rows);

/// Replays recorded row operations on a row list (for round-trip checks and
/// for deriving gate stages).
void apply_row_ops(std::span<const RowOp> ops, std::vector<XorFunc>& rows);

/// Index of the first element that is linearly dependent on its
/// predecessors in iteration order. Precondition: rank(block) < |block|.
std::size_t find_dependent_index(std::span<const XorFunc> block);

}  // namespace tpar
