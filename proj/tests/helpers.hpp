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

#include <initializer_list>
#include <random>
#include <set>
#include <vector>

#include "tpar/circuit.hpp"
#include "tpar/gf2.hpp"
#include "tpar/phase_poly.hpp"

namespace tpar::test {

inline XorFunc make_mask(std::size_t width, std::initializer_list<int> vars) {
  XorFunc f(width);
  for (int v : vars) f.set(static_cast<std::size_t>(v));
  return f;
}

inline XorFunc random_mask(std::size_t width, std::mt19937_64& rng, bool allow_zero = true) {
  XorFunc f(width);
  do {
    for (std::size_t i = 0; i < width; ++i)
      if (rng() & 1u) f.set(i);
  } while (!allow_zero && f.mask_zero());
  return f;
}

inline std::uint64_t mask_bits(const XorFunc& f) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < f.width(); ++i)
    if (f.test(i)) bits |= std::uint64_t{1} << i;
  return bits;
}

// rank by exhaustive span enumeration (widths <= 16)
inline std::size_t brute_rank(const std::vector<XorFunc>& rows) {
  std::set<std::uint64_t> span{0};
  for (const auto& r : rows) {
    std::set<std::uint64_t> next = span;
    for (auto v : span) next.insert(v ^ mask_bits(r));
    span = next;
  }
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

inline Circuit random_cnot_t_circuit(int wires, int gates, std::mt19937_64& rng,
                                     bool with_x = true) {
  Circuit c;
  for (int i = 0; i < wires; ++i) c.wire_names.push_back("q" + std::to_string(i));
  c.num_inputs = wires;
  std::uniform_int_distribution<int> wire(0, wires - 1);
  std::uniform_int_distribution<int> pick(0, with_x ? 7 : 6);
  for (int i = 0; i < gates; ++i) {
    switch (pick(rng)) {
      case 0: {
        int a = wire(rng), b = wire(rng);
        if (a == b) b = (b + 1) % wires;
        c.append(Gate::cnot(a, b));
        break;
      }
      case 1:
        c.append(Gate::t(wire(rng)));
        break;
      case 2:
        c.append(Gate::tdg(wire(rng)));
        break;
      case 3:
        c.append(Gate::p(wire(rng)));
        break;
      case 4:
        c.append(Gate::pdg(wire(rng)));
        break;
      case 5:
        c.append(Gate::z(wire(rng)));
        break;
      case 6: {
        int a = wire(rng), b = wire(rng);
        if (a == b) b = (b + 1) % wires;
        c.append(Gate::cnot(a, b));
        break;
      }
      default:
        c.append(Gate::x(wire(rng)));
        break;
    }
  }
  return c;
}

// Clifford+T circuit over the full gate set (H included)
inline Circuit random_clifford_t_circuit(int wires, int gates, std::mt19937_64& rng,
                                         int max_h = 4) {
  Circuit c = random_cnot_t_circuit(wires, gates, rng);
  int h_budget = max_h;
  std::uniform_int_distribution<int> wire(0, wires - 1);
  std::uniform_int_distribution<std::size_t> pos(0, c.gates.size());
  while (h_budget-- > 0) {
    auto at = c.gates.begin() + static_cast<std::ptrdiff_t>(pos(rng) % (c.gates.size() + 1));
    c.gates.insert(at, Gate::h(wire(rng)));
  }
  return c;
}

}  // namespace tpar::test
