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

#include "tpar/circuit.hpp"

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "helpers.hpp"
#include "tpar/bench.hpp"
#include "tpar/verify.hpp"

using namespace tpar;
using namespace tpar::test;

TEST_CASE("parses a minimal two-wire file") {
  Circuit c = parse_qc(".v a b\n.i a b\nBEGIN\ntof a b\nEND");
  CHECK(c.num_wires() == 2);
  CHECK(c.num_inputs == 2);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0] == Gate::cnot(0, 1));
}

TEST_CASE("parses the four-wire cancellation demo") {
  const char* text =
      ".v x1 x2 x3 x4\n"
      ".i x1 x2 x3 x4\n"
      "BEGIN\n"
      "tof x3 x4\n"
      "T x1\n"
      "T x4\n"
      "tof x1 x2\n"
      "tof x3 x4\n"
      "tof x2 x3\n"
      "tof x2 x1\n"
      "tof x4 x3\n"
      "tof x2 x3\n"
      "T x3\n"
      "tof x1 x2\n"
      "T* x2\n"
      "END\n";
  Circuit c = parse_qc(text);
  CHECK(c.gates.size() == 12);
  int t_type = 0;
  for (const auto& g : c.gates)
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) ++t_type;
  CHECK(t_type == 4);
  CHECK(c == cancellation_demo_circuit());
}

TEST_CASE("comments and ancilla declarations are handled") {
  Circuit c = parse_qc("# header\n.v a b anc\n.i a b # data wires\n.o a b\nBEGIN\nH anc\nEND\n");
  CHECK(c.num_wires() == 3);
  CHECK(c.num_inputs == 2);
  CHECK(c.gates[0] == Gate::h(2));
}

TEST_CASE("non-prefix input declarations are reordered inputs-first") {
  Circuit c = parse_qc(".v anc a b\n.i a b\nBEGIN\ntof a anc\nEND");
  CHECK(c.wire_names == std::vector<std::string>{"a", "b", "anc"});
  CHECK(c.num_inputs == 2);
  CHECK(c.gates[0] == Gate::cnot(0, 2));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_qc(".v a\n.i a\nBEGIN\nQ a\nEND"),
                       "line 4: unknown gate mnemonic 'Q'", ParseError);
  CHECK_THROWS_WITH_AS(parse_qc(".v a\n.i a\nBEGIN\nH b\nEND"),
                       "line 4: undeclared wire 'b'", ParseError);
  CHECK_THROWS_AS(parse_qc(".v a b\n.i a\nBEGIN\ntof a\nEND"), ParseError);       // bad arity
  CHECK_THROWS_AS(parse_qc(".v a b\n.i a\nBEGIN\ntof a a\nEND"), ParseError);     // repeated wire
  CHECK_THROWS_AS(parse_qc(".v a\n.i a\nBEGIN\nH a\n"), ParseError);              // missing END
}

TEST_CASE("write emits the canonical header for an empty circuit") {
  Circuit c;
  c.wire_names = {"a", "b"};
  c.num_inputs = 1;
  CHECK(write_qc(c) == ".v a b\n.i a\nBEGIN\nEND\n");
}

TEST_CASE("ccz fixture serializes to thirteen gate lines") {
  std::string text = write_qc(ccz_fixture());
  int lines = 0;
  bool in_body = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol - pos);
    if (line == "END") in_body = false;
    if (in_body) ++lines;
    if (line == "BEGIN") in_body = true;
    pos = eol + 1;
  }
  CHECK(lines == 13);
}

TEST_CASE("parse-write round trip is the identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c = random_clifford_t_circuit(2 + static_cast<int>(rng() % 5), 20, rng);
    CHECK(parse_qc(write_qc(c)) == c);
  }
  CHECK(parse_qc(write_qc(two_toffoli_circuit())) == two_toffoli_circuit());
}

TEST_CASE("t-depth is zero without T gates") {
  Circuit c;
  c.wire_names = {"a", "b"};
  c.num_inputs = 2;
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  CHECK(t_depth(c) == 0);
}

TEST_CASE("t-depth of the ccz gate list is four") {
  CHECK(t_depth(ccz_fixture()) == 4);
}

TEST_CASE("t-depth of the one-ancilla ccz realization is two") {
  Circuit c = ccz_one_ancilla_circuit();
  CHECK(t_depth(c) == 2);
  CHECK(metrics(c).t_count == 7);
}

TEST_CASE("expanding one Toffoli yields fifteen gates") {
  Circuit c;
  c.wire_names = {"a", "b", "c"};
  c.num_inputs = 3;
  c.append(Gate::toffoli(0, 1, 2));
  Circuit e = expand(c);
  CHECK(e.gates.size() == 15);
  int h = 0;
  for (const auto& g : e.gates)
    if (g.kind == GateKind::H) ++h;
  CHECK(h == 2);
}

TEST_CASE("expansion leaves Toffoli-free circuits unchanged") {
  std::mt19937_64 rng(5);
  Circuit c = random_clifford_t_circuit(4, 25, rng);
  CHECK(expand(c) == c);
}

TEST_CASE("the expanded Toffoli implements the Toffoli") {
  Circuit c;
  c.wire_names = {"a", "b", "c"};
  c.num_inputs = 3;
  c.append(Gate::toffoli(0, 1, 2));
  auto report = check_unitary(expand(c), c);
  CHECK(report.verdict == Verdict::equal);
}

TEST_CASE("metrics of the ccz gate list") {
  Metrics m = metrics(ccz_fixture());
  CHECK(m.t_count == 7);
  CHECK(m.cnot_count == 6);
  CHECK(m.h_count == 0);
  CHECK(m.qubits == 3);
  CHECK(m.ancillae == 0);
}

TEST_CASE("metrics of the empty circuit are zero") {
  Circuit c;
  CHECK(metrics(c) == Metrics{});
}

TEST_CASE("unexpanded Toffolis count as their expansion") {
  Metrics m = metrics(two_toffoli_circuit());
  CHECK(m.t_count == 14);
  CHECK(m.t_depth == 6);
  CHECK(m.cnot_count == 12);
  CHECK(m.h_count == 4);
}

TEST_CASE("inverse pairs cancel through disjoint gates") {
  Circuit c;
  c.wire_names = {"a", "b", "c"};
  c.num_inputs = 3;
  c.append(Gate::h(0));
  c.append(Gate::cnot(1, 2));  // disjoint from wire 0
  c.append(Gate::h(0));
  c.append(Gate::t(1));
  c.append(Gate::tdg(1));
  Circuit out = cancel_inverse_pairs(c);
  REQUIRE(out.gates.size() == 1);
  CHECK(out.gates[0] == Gate::cnot(1, 2));
}

TEST_CASE("overlapping gates block cancellation") {
  Circuit c;
  c.wire_names = {"a", "b"};
  c.num_inputs = 2;
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::h(0));
  CHECK(cancel_inverse_pairs(c).gates.size() == 3);

  Circuit d;
  d.wire_names = {"a", "b"};
  d.num_inputs = 2;
  d.append(Gate::cnot(0, 1));
  d.append(Gate::cnot(1, 0));  // same wires, different roles: no cancel
  CHECK(cancel_inverse_pairs(d).gates.size() == 2);
}

TEST_CASE("cancellation preserves the unitary") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = random_clifford_t_circuit(3, 15, rng);
    Circuit out = cancel_inverse_pairs(c);
    CHECK(check_unitary(c, out).verdict == Verdict::equal);
  }
}

TEST_CASE("t-depth never exceeds t-count") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    Circuit c = random_clifford_t_circuit(3 + static_cast<int>(rng() % 3), 25, rng, 3);
    CHECK(t_depth(c) <= metrics(c).t_count);
  }
  CHECK(t_depth(two_toffoli_circuit()) <= metrics(two_toffoli_circuit()).t_count);
}
