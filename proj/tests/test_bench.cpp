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

#include "tpar/bench.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "tpar/verify.hpp"

using namespace tpar;
using namespace tpar::test;

namespace {

void check_mct_function(const Circuit& c, int k) {
  const auto input_bits = static_cast<std::size_t>(c.num_inputs);
  REQUIRE(input_bits <= 16);
  for (std::size_t x = 0; x < (std::size_t{1} << input_bits); ++x) {
    std::vector<bool> in(input_bits);
    for (std::size_t i = 0; i < input_bits; ++i) in[i] = (x >> i) & 1u;
    auto out = simulate_classical(c, in);
    std::vector<bool> want(static_cast<std::size_t>(c.num_wires()), false);
    for (std::size_t i = 0; i < input_bits; ++i) want[i] = in[i];
    bool controls = true;
    for (int i = 0; i < k; ++i) controls = controls && in[static_cast<std::size_t>(i)];
    if (controls) want[static_cast<std::size_t>(k)] = !want[static_cast<std::size_t>(k)];
    CHECK(out == want);
  }
}

int toffoli_count(const Circuit& c) {
  int n = 0;
  for (const auto& g : c.gates)
    if (g.kind == GateKind::Toffoli) ++n;
  return n;
}

}  // namespace

TEST_CASE("fixture metrics and unitary") {
  Circuit c = ccz_fixture();
  Metrics m = metrics(c);
  CHECK(m.t_count == 7);
  CHECK(m.cnot_count == 6);
  CHECK(summarize(c).terms.size() == 7);
}

TEST_CASE("dirty-helper mct uses 4k-8 Toffolis and computes the mct") {
  for (int k : {3, 4, 5}) {
    Circuit c = gen_mct_barenco(k);
    CHECK(c.num_wires() == 2 * k - 1);
    CHECK(c.num_inputs == 2 * k - 1);
    CHECK(toffoli_count(c) == 4 * k - 8);
    check_mct_function(c, k);
  }
  CHECK(metrics(expand(gen_mct_barenco(3))).t_count == 28);
  CHECK_THROWS_AS(gen_mct_barenco(2), std::invalid_argument);
}

TEST_CASE("clean-ancilla mct uses 2k-3 Toffolis and computes the mct") {
  for (int k : {3, 4, 5}) {
    Circuit c = gen_mct_nc(k);
    CHECK(c.num_wires() == 2 * k - 1);
    CHECK(c.num_inputs == k + 1);
    CHECK(toffoli_count(c) == 2 * k - 3);
    check_mct_function(c, k);
  }
  CHECK(metrics(expand(gen_mct_nc(3))).t_count == 21);
  CHECK_THROWS_AS(gen_mct_nc(2), std::invalid_argument);
}

TEST_CASE("the four-control clean-ancilla mct is unitarily correct") {
  // statevector cross-check of the expanded circuit against the Toffoli form
  Circuit c = gen_mct_nc(4);
  REQUIRE(c.num_wires() == 7);
  CHECK(check_unitary(expand(c), c).verdict == Verdict::equal);
}

TEST_CASE("default moduli are the expected irreducibles") {
  CHECK(default_modulus(2) == 0b111);
  CHECK(default_modulus(3) == 0b1011);
  CHECK(default_modulus(4) == 0b10011);
  CHECK(default_modulus(5) == 0b100101);
  CHECK(default_modulus(6) == 0b1000011);
  CHECK(default_modulus(7) == 0b10000011);
  CHECK(default_modulus(8) == 0b100011011);
  CHECK(is_irreducible(0b10011, 4));
  CHECK(is_irreducible(0b11111, 4));        // the degree-4 cyclotomic factor
  CHECK_FALSE(is_irreducible(0b10101, 4));  // (x^2+x+1)^2
  CHECK_FALSE(is_irreducible(0b10110, 4));  // divisible by x
}

TEST_CASE("field multiplier sizes and functional correctness") {
  SUBCASE("m = 2 uses four Toffolis and matches the field tables") {
    Circuit c = gen_gf_mult(2);
    CHECK(toffoli_count(c) == 4);
    for (std::uint64_t a = 0; a < 4; ++a)
      for (std::uint64_t b = 0; b < 4; ++b) {
        std::vector<bool> in{bool(a & 1), bool(a & 2), bool(b & 1), bool(b & 2)};
        auto out = simulate_classical(c, in);
        std::uint64_t got = (out[4] ? 1 : 0) | (out[5] ? 2 : 0);
        CHECK(got == gf_mult_ref(a, b, 0b111, 2));
      }
  }
  SUBCASE("m = 4 products are exhaustive-checked") {
    Circuit c = gen_gf_mult(4);
    CHECK(toffoli_count(c) == 16);
    CHECK(metrics(expand(c)).t_count == 112);
    for (std::uint64_t a = 0; a < 16; ++a)
      for (std::uint64_t b = 0; b < 16; ++b) {
        std::vector<bool> in(8);
        for (int i = 0; i < 4; ++i) {
          in[static_cast<std::size_t>(i)] = (a >> i) & 1u;
          in[static_cast<std::size_t>(4 + i)] = (b >> i) & 1u;
        }
        auto out = simulate_classical(c, in);
        std::uint64_t got = 0;
        for (int i = 0; i < 4; ++i)
          if (out[static_cast<std::size_t>(8 + i)]) got |= std::uint64_t{1} << i;
        CHECK(got == gf_mult_ref(a, b, 0b10011, 4));
      }
  }
  SUBCASE("reducible moduli are rejected") {
    CHECK_THROWS_AS(gen_gf_mult(4, 0b10101), std::invalid_argument);
  }
}

TEST_CASE("reference field product agrees with a known table") {
  // GF(2^4) with x^4+x+1: x * x^3 = x^4 = x + 1
  CHECK(gf_mult_ref(0b0010, 0b1000, 0b10011, 4) == 0b0011);
  CHECK(gf_mult_ref(0b1001, 0b1001, 0b10011, 4) == 0b1101);  // (x^3+1)^2 = x^6+1 = x^3+x^2+1
}

TEST_CASE("benchmark sweeps reproduce the closed-form T-counts") {
  std::vector<BenchSpec> specs;
  for (int k = 3; k <= 10; ++k) specs.push_back({BenchSpec::Family::mct_barenco, k, 0});
  for (int k = 3; k <= 10; ++k) specs.push_back({BenchSpec::Family::mct_nc, k, 0});
  std::vector<BenchPolicy> policies{BenchPolicy::fixed(0)};
  BenchReport report = run_benchmarks(specs, policies);
  REQUIRE(report.rows.size() == 16);
  for (int k = 3; k <= 10; ++k) {
    const auto& barenco = report.rows[static_cast<std::size_t>(k - 3)];
    CHECK(barenco.tc_before == 7 * (4 * k - 8));
    CHECK(barenco.tc_after == 3 * (4 * k - 8) + 4);
    CHECK(barenco.verify_verdict.substr(0, 5) == "equal");
    const auto& nc = report.rows[static_cast<std::size_t>(8 + k - 3)];
    CHECK(nc.tc_before == 7 * (2 * k - 3));
    CHECK(nc.tc_after == 4 * (2 * k - 3) + 3);
    CHECK(nc.verify_verdict.substr(0, 5) == "equal");
  }
}

TEST_CASE("an empty spec list produces a header-only report") {
  BenchReport report = run_benchmarks({}, std::vector<BenchPolicy>{BenchPolicy::fixed(0)});
  CHECK(report.rows.empty());
  std::string csv = report.to_csv();
  CHECK(csv.find("tc_before") != std::string::npos);
  CHECK(csv.find('\n') == csv.size() - 1);
}

TEST_CASE("reports render as csv and markdown") {
  std::vector<BenchSpec> specs{{BenchSpec::Family::fixture, 0, 0}};
  std::vector<BenchPolicy> policies{BenchPolicy::fixed(0), BenchPolicy::n_wires(),
                                    BenchPolicy::unbounded()};
  BenchReport report = run_benchmarks(specs, policies);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].ancillae_policy == "0");
  CHECK(report.rows[1].ancillae_policy == "n");
  CHECK(report.rows[2].ancillae_policy == "unbounded");
  for (const auto& row : report.rows) {
    CHECK(row.tc_after == 7);
    CHECK(row.verify_verdict.substr(0, 5) == "equal");
  }
  CHECK(report.to_csv().find("ccz-fixture,3,0,7,7,") != std::string::npos);
  CHECK(report.to_markdown().find("| ccz-fixture | 3 | 0 |") != std::string::npos);
}
