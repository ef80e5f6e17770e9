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

#include "tpar/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace tpar {

XorFunc& XorFunc::operator^=(const XorFunc& other) {
  if (width_ != other.width_) throw std::invalid_argument("XorFunc width mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  parity_ ^= other.parity_;
  return *this;
}

bool XorFunc::mask_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int XorFunc::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

std::size_t XorFunc::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

void XorFunc::widen(std::size_t new_width) {
  if (new_width < width_) throw std::invalid_argument("XorFunc::widen cannot shrink");
  width_ = new_width;
  words_.resize(word_count(new_width), 0);
}

std::uint64_t XorFunc::mask_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

void check_widths(std::span<const XorFunc> rows) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].width() != rows[0].width())
      throw std::invalid_argument("row width mismatch");
}

}  // namespace

void Echelon::reduce(XorFunc& f) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (f.test(static_cast<std::size_t>(pivots_[i]))) f ^= rows_[i];
}

bool Echelon::insert(XorFunc f) {
  reduce(f);
  int p = f.lowest_set();
  if (p < 0) return false;
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(f));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

bool Echelon::contains(XorFunc f) const {
  reduce(f);
  return f.mask_zero();
}

std::size_t rank(std::span<const XorFunc> rows) {
  check_widths(rows);
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

bool in_span(const XorFunc& f, std::span<const XorFunc> basis) {
  check_widths(basis);
  if (!basis.empty() && basis[0].width() != f.width())
    throw std::invalid_argument("row width mismatch");
  Echelon e;
  for (const auto& r : basis) e.insert(r);
  return e.contains(f);
}

std::pair<Basis, std::vector<RowOp>> eliminate_with_ops(std::vector<XorFunc> rows) {
  if (rows.empty()) throw std::invalid_argument("eliminate_with_ops: no rows");
  check_widths(rows);
  const std::size_t n = rows.size();
  const std::size_t width = rows[0].width();
  std::vector<RowOp> ops;

  auto add = [&](std::size_t src, std::size_t tgt) {
    rows[tgt] ^= rows[src];
    ops.push_back(RowOp::add(static_cast<int>(src), static_cast<int>(tgt)));
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < n; ++col) {
    std::size_t j = r;
    while (j < n && !rows[j].test(col)) ++j;
    if (j == n) continue;
    if (j != r) {
      // xor-swap keeps everything expressible as row additions
      add(j, r);
      add(r, j);
      add(j, r);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && rows[i].test(col)) add(r, i);
    ++r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].parity()) {
      rows[i].flip_parity();
      ops.push_back(RowOp::flip(static_cast<int>(i)));
    }
  }

  Basis basis;
  for (std::size_t i = 0; i < r; ++i) {
    basis.pivots.push_back(rows[i].lowest_set());
    basis.rows.push_back(rows[i]);
  }
  return {std::move(basis), std::move(ops)};
}

void apply_row_ops(std::span<const RowOp> ops, std::vector<XorFunc>& rows) {
  for (const auto& op : ops) {
    if (op.kind == RowOp::Kind::add_row)
      rows[static_cast<std::size_t>(op.target)] ^= rows[static_cast<std::size_t>(op.source)];
    else
      rows[static_cast<std::size_t>(op.target)].flip_parity();
  }
}

std::size_t find_dependent_index(std::span<const XorFunc> block) {
  Echelon e;
  for (std::size_t i = 0; i < block.size(); ++i)
    if (!e.insert(block[i])) return i;
  throw std::invalid_argument("find_dependent_index: block is linearly independent");
}

}  // namespace tpar
