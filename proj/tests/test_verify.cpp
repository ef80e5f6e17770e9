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

#include "tpar/verify.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "tpar/bench.hpp"
#include "tpar/optimizer.hpp"

using namespace tpar;
using namespace tpar::test;

TEST_CASE("the hand-optimized cancellation demo is summary-equal") {
  auto report = check_summary(cancellation_demo_circuit(), cancellation_demo_optimized());
  CHECK(report.verdict == Verdict::equal);
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("an extra T gate is caught with a witness") {
  Circuit c = cancellation_demo_circuit();
  Circuit with_extra = c;
  with_extra.append(Gate::t(0));
  auto report = check_summary(c, with_extra);
  REQUIRE(report.verdict == Verdict::different);
  REQUIRE(report.witness.has_value());
  // the witness assignment must set the offending term's function to 1
  CHECK(report.witness->find('1') != std::string::npos);
}

TEST_CASE("different Hadamard skeletons report as different, not a crash") {
  Circuit a;
  a.wire_names = {"q"};
  a.num_inputs = 1;
  a.append(Gate::h(0));
  Circuit b = a;
  b.append(Gate::t(0));
  b.append(Gate::h(0));
  auto report = check_summary(a, b);
  CHECK(report.verdict == Verdict::different);
  CHECK_FALSE(report.note.empty());
}

TEST_CASE("summary equality holds for every optimized random circuit") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = random_clifford_t_circuit(4, 20, rng, 3);
    auto result = optimize(c);
    CHECK(check_summary(c, result.circuit).verdict == Verdict::equal);
  }
}

TEST_CASE("unitary check accepts H pairs as the identity") {
  Circuit a;
  a.wire_names = {"q"};
  a.num_inputs = 1;
  a.append(Gate::h(0));
  a.append(Gate::h(0));
  Circuit b;
  b.wire_names = {"q"};
  b.num_inputs = 1;
  auto report = check_unitary(a, b);
  CHECK(report.verdict == Verdict::equal);
  CHECK(report.max_amplitude_error <= 1e-9);
}

TEST_CASE("the ccz gate list is the doubly-controlled Z") {
  Circuit c = ccz_fixture();
  for (std::size_t x = 0; x < 8; ++x) {
    std::vector<bool> in{bool(x & 1), bool(x & 2), bool(x & 4)};
    auto amp = simulate_statevector(c, in);
    for (std::size_t s = 0; s < amp.size(); ++s) {
      std::complex<double> want = 0.0;
      if (s == x) want = (x == 7) ? -1.0 : 1.0;
      CHECK(std::abs(amp[s] - want) <= 1e-9);
    }
  }
}

TEST_CASE("phase differences are flagged as global when uniform") {
  Circuit a;
  a.wire_names = {"q"};
  a.num_inputs = 1;
  a.append(Gate::x(0));
  a.append(Gate::t(0));
  a.append(Gate::x(0));
  // w^(1-x) = w * w^(-x): same as Tdg up to the global w
  Circuit b;
  b.wire_names = {"q"};
  b.num_inputs = 1;
  b.append(Gate::tdg(0));
  auto report = check_unitary(a, b);
  CHECK(report.verdict == Verdict::equal_up_to_global_phase);
}

TEST_CASE("unitary check is symmetric and reflexive") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit a = random_clifford_t_circuit(3, 15, rng, 2);
    Circuit b = random_clifford_t_circuit(3, 15, rng, 2);
    CHECK(check_unitary(a, a).verdict == Verdict::equal);
    CHECK(check_unitary(a, b).ok() == check_unitary(b, a).ok());
  }
}

TEST_CASE("unitary differences produce a witness input") {
  Circuit a;
  a.wire_names = {"p", "q"};
  a.num_inputs = 2;
  a.append(Gate::cnot(0, 1));
  Circuit b = a;
  b.append(Gate::t(1));
  auto report = check_unitary(a, b);
  REQUIRE(report.verdict == Verdict::different);
  CHECK(report.witness.has_value());
}

TEST_CASE("wire caps are enforced") {
  Circuit big;
  for (int i = 0; i < 11; ++i) big.wire_names.push_back("q" + std::to_string(i));
  big.num_inputs = 11;
  CHECK_THROWS_AS(check_unitary(big, big), std::invalid_argument);
}

TEST_CASE("summary equality entails unitary equivalence") {
  std::mt19937_64 rng(89);
  int compared = 0;
  while (compared < 15) {
    Circuit c = random_clifford_t_circuit(3, 18, rng, 3);
    auto result = optimize(c, {AncillaPolicy::fixed(1), false});
    if (result.circuit.num_wires() > 10) continue;
    ++compared;
    if (check_summary(c, result.circuit).verdict == Verdict::equal)
      CHECK(check_unitary(c, result.circuit).ok());
  }
}

TEST_CASE("brute-force partition minima for the ccz phases") {
  auto s = summarize(ccz_fixture());
  CHECK(brute_force_min_partition(s.terms.terms(), Oracle{3, 3}) == 3);
  CHECK(brute_force_min_partition(s.terms.terms(), Oracle{3, 4}) == 2);
  PhaseTerm single{1, make_mask(2, {0})};
  CHECK(brute_force_min_partition(std::vector<PhaseTerm>{single}, Oracle{2, 2}) == 1);
  CHECK(brute_force_min_partition({}, Oracle{2, 2}) == 0);
}

TEST_CASE("the term cap of the brute-force search is enforced") {
  std::vector<PhaseTerm> many;
  for (int i = 0; i < 10; ++i) many.push_back({1, make_mask(12, {i})});
  CHECK_THROWS_AS(brute_force_min_partition(many, Oracle{12, 12}), std::invalid_argument);
}
