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
#include <span>
#include <string>
#include <vector>

#include "tpar/circuit.hpp"
#include "tpar/optimizer.hpp"

namespace tpar {

/// One benchmark instance to generate.
struct BenchSpec {
  enum class Family { mct_barenco, mct_nc, gf_mult, fixture };
  Family family = Family::fixture;
  int size = 0;                // k for the multiply-controlled families, m for gf-mult
  std::uint64_t modulus = 0;   // gf-mult only; 0 selects the default for m

  std::string name() const;
};

/// Ancilla setting for a benchmark sweep; "n" resolves to the circuit's
/// own wire count.
struct BenchPolicy {
  enum class Kind { fixed, n_wires, unbounded };
  Kind kind = Kind::fixed;
  int count = 0;

  static BenchPolicy fixed(int h) { return {Kind::fixed, h}; }
  static BenchPolicy n_wires() { return {Kind::n_wires, 0}; }
  static BenchPolicy unbounded() { return {Kind::unbounded, 0}; }

  std::string label() const;
  AncillaPolicy resolve(const Circuit& c) const;
};

/// The 3-wire doubly-controlled-Z circuit over {CNOT, T}: 7 T-type gates,
/// 6 CNOTs, no Hadamards.
Circuit ccz_fixture();

/// Multiply-controlled NOT on k controls from 4k-8 Toffolis and k-2 helper
/// wires of arbitrary initial state (all wires are inputs; helpers are
/// restored).
Circuit gen_mct_barenco(int k);

/// Multiply-controlled NOT on k controls from 2k-3 Toffolis and k-2 |0>
/// ancillae (restored).
Circuit gen_mct_nc(int k);

/// GF(2^m) multiplier on 3m wires: registers a and b in, product a*b mod
/// modulus accumulated into the |0> register c. Exactly m*m Toffolis in two
/// stages around a CNOT reduction of the high-degree products by the
/// modulus. Throws if the modulus is reducible or of the wrong degree.
Circuit gen_gf_mult(int m, std::uint64_t modulus = 0);

/// Lexicographically least irreducible polynomial of degree m.
std::uint64_t default_modulus(int m);

/// Irreducibility over F2 by trial division (degree <= 32).
bool is_irreducible(std::uint64_t poly, int m);

/// Reference field product (bit i of each operand = coefficient of x^i).
std::uint64_t gf_mult_ref(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int m);

/// Permutation semantics of an {X, CNOT, Toffoli} circuit on a basis input
/// (data wires from `input`, ancillae 0). Throws on any other gate.
std::vector<bool> simulate_classical(const Circuit& c, const std::vector<bool>& input);

struct BenchRow {
  std::string name;
  int n = 0;
  std::string ancillae_policy;
  int tc_before = 0;
  int tc_after = 0;
  int td_before = 0;
  int td_after = 0;
  int cnot_before = 0;
  int cnot_after = 0;
  int h_count = 0;
  std::string verify_verdict;
  double seconds = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  std::string to_csv() const;
  std::string to_markdown() const;
};

/// Generates, functionally checks, optimizes and verifies each spec under
/// each policy. Failures are recorded in the row's verdict and the run
/// continues.
BenchReport run_benchmarks(std::span<const BenchSpec> specs,
                           std::span<const BenchPolicy> policies);

}  // namespace tpar
