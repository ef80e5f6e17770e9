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

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tpar/gf2.hpp"
#include "tpar/verify.hpp"

namespace tpar {

std::string BenchSpec::name() const {
  switch (family) {
    case Family::mct_barenco:
      return "mct-barenco-k" + std::to_string(size);
    case Family::mct_nc:
      return "mct-nc-k" + std::to_string(size);
    case Family::gf_mult:
      return "gf-mult-m" + std::to_string(size);
    case Family::fixture:
      return "ccz-fixture";
  }
  return "?";
}

std::string BenchPolicy::label() const {
  switch (kind) {
    case Kind::fixed:
      return std::to_string(count);
    case Kind::n_wires:
      return "n";
    case Kind::unbounded:
      return "unbounded";
  }
  return "?";
}

AncillaPolicy BenchPolicy::resolve(const Circuit& c) const {
  switch (kind) {
    case Kind::fixed:
      return AncillaPolicy::fixed(count);
    case Kind::n_wires:
      return AncillaPolicy::fixed(c.num_wires());
    case Kind::unbounded:
      return AncillaPolicy::unbounded();
  }
  return AncillaPolicy::fixed(0);
}

Circuit ccz_fixture() {
  Circuit c;
  c.wire_names = {"a", "b", "c"};
  c.num_inputs = 3;
  c.gates = ccz_gates(0, 1, 2);
  return c;
}

namespace {

std::string indexed(const char* stem, int i) { return stem + std::to_string(i + 1); }

}  // namespace

Circuit gen_mct_barenco(int k) {
  if (k < 3) throw std::invalid_argument("multiply-controlled families need k >= 3");
  // controls 0..k-1, target k, helpers k+1..2k-2 (arbitrary state: inputs)
  Circuit c;
  for (int i = 0; i < k; ++i) c.wire_names.push_back(indexed("c", i));
  c.wire_names.push_back("t");
  for (int i = 0; i < k - 2; ++i) c.wire_names.push_back(indexed("a", i));
  c.num_inputs = 2 * k - 1;

  const int target = k;
  auto helper = [&](int j) { return k + 1 + j; };  // a_{j+1}, j = 0..k-3

  std::vector<Gate> half;
  half.push_back(Gate::toffoli(k - 1, helper(k - 3), target));
  for (int j = k - 2; j >= 2; --j) half.push_back(Gate::toffoli(j, helper(j - 2), helper(j - 1)));
  half.push_back(Gate::toffoli(0, 1, helper(0)));
  for (int j = 2; j <= k - 2; ++j) half.push_back(Gate::toffoli(j, helper(j - 2), helper(j - 1)));

  c.gates = half;
  c.gates.insert(c.gates.end(), half.begin(), half.end());
  return c;
}

Circuit gen_mct_nc(int k) {
  if (k < 3) throw std::invalid_argument("multiply-controlled families need k >= 3");
  // controls 0..k-1, target k, |0> ancillae k+1..2k-2
  Circuit c;
  for (int i = 0; i < k; ++i) c.wire_names.push_back(indexed("c", i));
  c.wire_names.push_back("t");
  for (int i = 0; i < k - 2; ++i) c.wire_names.push_back(indexed("a", i));
  c.num_inputs = k + 1;

  const int target = k;
  auto anc = [&](int j) { return k + 1 + j; };  // a_{j+1}, j = 0..k-3

  std::vector<Gate> down;
  down.push_back(Gate::toffoli(0, 1, anc(0)));
  for (int j = 1; j <= k - 3; ++j) down.push_back(Gate::toffoli(j + 1, anc(j - 1), anc(j)));

  c.gates = down;
  c.gates.push_back(Gate::toffoli(k - 1, anc(k - 3), target));
  c.gates.insert(c.gates.end(), down.rbegin(), down.rend());
  return c;
}

bool is_irreducible(std::uint64_t poly, int m) {
  if (m < 1 || m > 32) throw std::invalid_argument("modulus degree out of range");
  if ((poly >> m) != 1u || !(poly & 1u)) return false;  // monic with nonzero constant
  auto degree = [](std::uint64_t p) {
    int d = -1;
    while (p) {
      ++d;
      p >>= 1;
    }
    return d;
  };
  auto poly_rem = [&](std::uint64_t a, std::uint64_t b) {
    int db = degree(b);
    while (degree(a) >= db && a) a ^= b << (degree(a) - db);
    return a;
  };
  for (std::uint64_t d = 2; degree(d) <= m / 2; ++d)
    if (poly_rem(poly, d) == 0) return false;
  return true;
}

std::uint64_t default_modulus(int m) {
  for (std::uint64_t p = (std::uint64_t{1} << m) | 1u;; p += 2) {
    if (is_irreducible(p, m)) return p;
  }
}

std::uint64_t gf_mult_ref(std::uint64_t a, std::uint64_t b, std::uint64_t modulus, int m) {
  std::uint64_t acc = 0;
  for (int i = 0; i < m; ++i)
    if ((a >> i) & 1u) acc ^= b << i;
  for (int d = 2 * m - 2; d >= m; --d)
    if ((acc >> d) & 1u) acc ^= modulus << (d - m);
  return acc;
}

namespace {

// one multiplier entry: the product a_i b_j, optionally with a second
// a-index folded into the control (computing (a_i xor a_x) b_j)
struct GfEntry {
  int i;
  int j;
  int extra_a = -1;
};

std::uint64_t residue_of(int degree, std::uint64_t modulus, int m) {
  std::uint64_t r = std::uint64_t{1} << degree;
  for (int d = degree; d >= m; --d)
    if ((r >> d) & 1u) r ^= modulus << (d - m);
  return r;
}

}  // namespace

Circuit gen_gf_mult(int m, std::uint64_t modulus) {
  if (m < 2) throw std::invalid_argument("gf-mult needs m >= 2");
  if (modulus == 0) modulus = default_modulus(m);
  if (!is_irreducible(modulus, m)) throw std::invalid_argument("modulus is reducible");

  // high group s accumulates the degree-(m+s) products, low group t the
  // degree-t ones
  std::vector<std::vector<GfEntry>> high(static_cast<std::size_t>(m - 1));
  std::vector<std::vector<GfEntry>> low(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i + j >= m)
        high[static_cast<std::size_t>(i + j - m)].push_back({i, j});
      else
        low[static_cast<std::size_t>(i + j)].push_back({i, j});
    }

  // For odd m both an odd-sized low diagonal and an odd-sized high group
  // exist; pairing them keeps one T-layer group per parity class smaller.
  // Move one product from the low diagonal into the high group and repair
  // the residue error (when it is a single unit e_t) by folding the moved
  // a-index into the matching degree-t product's control.
  if (m % 2 == 1) {
    bool applied = false;
    for (int s = 0; s <= m - 2 && !applied; ++s) {
      if (high[static_cast<std::size_t>(s)].size() % 2 == 0) continue;
      for (int k = 0; k < m && !applied; k += 2) {  // odd-sized low diagonals
        for (std::size_t idx = 0; idx < low[static_cast<std::size_t>(k)].size() && !applied;
             ++idx) {
          GfEntry moved = low[static_cast<std::size_t>(k)][idx];
          std::uint64_t error = residue_of(m + s, modulus, m) ^ (std::uint64_t{1} << k);
          if (std::popcount(error) != 1) continue;
          int t = std::countr_zero(error);
          int partner_i = t - moved.j;
          if (t >= m || partner_i < 0 || partner_i >= m || partner_i == moved.i) continue;
          auto& group = low[static_cast<std::size_t>(t)];
          for (auto& entry : group) {
            if (entry.i == partner_i && entry.j == moved.j && entry.extra_a < 0) {
              entry.extra_a = moved.i;
              high[static_cast<std::size_t>(s)].push_back(moved);
              low[static_cast<std::size_t>(k)].erase(
                  low[static_cast<std::size_t>(k)].begin() + static_cast<std::ptrdiff_t>(idx));
              applied = true;
              break;
            }
          }
        }
      }
    }
  }

  Circuit c;
  for (int i = 0; i < m; ++i) c.wire_names.push_back(indexed("a", i));
  for (int i = 0; i < m; ++i) c.wire_names.push_back(indexed("b", i));
  for (int i = 0; i < m; ++i) c.wire_names.push_back(indexed("c", i));
  c.num_inputs = 2 * m;
  auto a_wire = [&](int i) { return i; };
  auto b_wire = [&](int j) { return m + j; };
  auto c_wire = [&](int t) { return 2 * m + t; };

  // Round-robin across groups, larger groups first, so every target's
  // first product (which opens its T-layer group) precedes any target's
  // last one.
  auto emit_stage = [&](const std::vector<std::vector<GfEntry>>& groups) {
    std::vector<std::size_t> order(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) order[g] = g;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return groups[a].size() > groups[b].size();
    });
    for (std::size_t round = 0;; ++round) {
      bool emitted = false;
      for (std::size_t g : order) {
        if (round >= groups[g].size()) continue;
        const GfEntry& e = groups[g][round];
        const int target = c_wire(static_cast<int>(g));
        if (e.extra_a >= 0) c.gates.push_back(Gate::cnot(a_wire(e.extra_a), a_wire(e.i)));
        c.gates.push_back(Gate::toffoli(a_wire(e.i), b_wire(e.j), target));
        if (e.extra_a >= 0) c.gates.push_back(Gate::cnot(a_wire(e.extra_a), a_wire(e.i)));
        emitted = true;
      }
      if (!emitted) break;
    }
  };

  // Stage 1: high products a_i b_j (i+j >= m) accumulate on wire c_s.
  emit_stage(high);

  // Reduction: map the accumulated sums to their residues, c := M e with
  // column s of M = x^(m+s) mod modulus. The spare column is any unit
  // vector keeping M invertible.
  {
    const auto width = static_cast<std::size_t>(m);
    std::vector<XorFunc> reduction_rows;
    std::vector<std::uint64_t> columns(width, 0);
    for (int s = 0; s <= m - 2; ++s)
      columns[static_cast<std::size_t>(s)] = residue_of(m + s, modulus, m);
    bool found = false;
    for (int t = m - 1; t >= 0 && !found; --t) {
      columns[static_cast<std::size_t>(m - 1)] = std::uint64_t{1} << t;
      std::vector<XorFunc> rows(width, XorFunc(width));
      for (int row = 0; row < m; ++row)
        for (int col = 0; col < m; ++col)
          if ((columns[static_cast<std::size_t>(col)] >> row) & 1u)
            rows[static_cast<std::size_t>(row)].set(static_cast<std::size_t>(col));
      if (rank(rows) == width) {
        reduction_rows = std::move(rows);
        found = true;
      }
    }
    if (!found) throw std::logic_error("no invertible reduction map for this modulus");
    auto [basis, ops] = eliminate_with_ops(std::move(reduction_rows));
    (void)basis;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      if (it->kind != RowOp::Kind::add_row)
        throw std::logic_error("reduction map produced a parity flip");
      c.gates.push_back(Gate::cnot(c_wire(it->source), c_wire(it->target)));
    }
  }

  // Stage 2: low products accumulate the degree-t sums on wire c_t on top
  // of the reduced high part.
  emit_stage(low);

  return c;
}

std::vector<bool> simulate_classical(const Circuit& c, const std::vector<bool>& input) {
  if (static_cast<int>(input.size()) != c.num_inputs)
    throw std::invalid_argument("input length must equal the circuit's input count");
  std::vector<bool> bits(static_cast<std::size_t>(c.num_wires()), false);
  for (int i = 0; i < c.num_inputs; ++i)
    bits[static_cast<std::size_t>(i)] = input[static_cast<std::size_t>(i)];
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::X:
        bits[static_cast<std::size_t>(g.wires[0])] = !bits[static_cast<std::size_t>(g.wires[0])];
        break;
      case GateKind::Cnot:
        bits[static_cast<std::size_t>(g.wires[1])] =
            bits[static_cast<std::size_t>(g.wires[1])] != bits[static_cast<std::size_t>(g.wires[0])];
        break;
      case GateKind::Toffoli:
        if (bits[static_cast<std::size_t>(g.wires[0])] && bits[static_cast<std::size_t>(g.wires[1])])
          bits[static_cast<std::size_t>(g.wires[2])] = !bits[static_cast<std::size_t>(g.wires[2])];
        break;
      default:
        throw std::invalid_argument("simulate_classical supports {X, CNOT, Toffoli} only");
    }
  }
  return bits;
}

namespace {

// Functional oracle for a generated circuit; throws on mismatch so
// generation bugs never show up as optimization bugs.
void check_generated(const BenchSpec& spec, const Circuit& c) {
  auto expect_mct = [&](int k, const std::vector<bool>& in) {
    auto out = simulate_classical(c, in);
    std::vector<bool> want(static_cast<std::size_t>(c.num_wires()), false);
    for (std::size_t i = 0; i < in.size(); ++i) want[i] = in[i];
    bool controls = true;
    for (int i = 0; i < k; ++i) controls = controls && in[static_cast<std::size_t>(i)];
    if (controls) want[static_cast<std::size_t>(k)] = !want[static_cast<std::size_t>(k)];
    if (out != want) throw std::logic_error(spec.name() + ": generated circuit is wrong");
  };

  switch (spec.family) {
    case BenchSpec::Family::fixture: {
      // ccZ is diagonal: w^(4*abc) on each basis state
      for (std::size_t x = 0; x < 8; ++x) {
        std::vector<bool> in{bool(x & 1), bool(x & 2), bool(x & 4)};
        auto amp = simulate_statevector(c, in);
        for (std::size_t s = 0; s < amp.size(); ++s) {
          double want = (s == x) ? 1.0 : 0.0;
          double sign = (x == 7) ? -1.0 : 1.0;
          if (std::abs(amp[s] - std::complex<double>{want * sign, 0.0}) > 1e-9)
            throw std::logic_error("ccz-fixture: wrong unitary");
        }
      }
      break;
    }
    case BenchSpec::Family::mct_barenco:
    case BenchSpec::Family::mct_nc: {
      const auto input_bits = static_cast<std::size_t>(c.num_inputs);
      if (input_bits <= 20) {
        for (std::size_t x = 0; x < (std::size_t{1} << input_bits); ++x) {
          std::vector<bool> in(input_bits, false);
          for (std::size_t i = 0; i < input_bits; ++i) in[i] = (x >> i) & 1u;
          expect_mct(spec.size, in);
        }
      } else {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 512; ++trial) {
          std::vector<bool> in(input_bits, false);
          for (std::size_t i = 0; i < input_bits; ++i) in[i] = rng() & 1u;
          // all-ones controls are vanishingly rare in random draws
          if (trial < 8)
            for (int i = 0; i < spec.size; ++i) in[static_cast<std::size_t>(i)] = true;
          expect_mct(spec.size, in);
        }
      }
      break;
    }
    case BenchSpec::Family::gf_mult: {
      const int m = spec.size;
      const std::uint64_t modulus = spec.modulus ? spec.modulus : default_modulus(m);
      auto product_of = [&](std::uint64_t a, std::uint64_t b) {
        std::vector<bool> in(static_cast<std::size_t>(2 * m), false);
        for (int i = 0; i < m; ++i) {
          in[static_cast<std::size_t>(i)] = (a >> i) & 1u;
          in[static_cast<std::size_t>(m + i)] = (b >> i) & 1u;
        }
        auto out = simulate_classical(c, in);
        std::uint64_t got = 0;
        for (int i = 0; i < m; ++i)
          if (out[static_cast<std::size_t>(2 * m + i)]) got |= std::uint64_t{1} << i;
        // a and b registers must pass through untouched
        for (int i = 0; i < 2 * m; ++i)
          if (out[static_cast<std::size_t>(i)] != in[static_cast<std::size_t>(i)])
            throw std::logic_error(spec.name() + ": operand register modified");
        return got;
      };
      if (m <= 5) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << m); ++a)
          for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b)
            if (product_of(a, b) != gf_mult_ref(a, b, modulus, m))
              throw std::logic_error(spec.name() + ": wrong field product");
      } else {
        std::mt19937_64 rng(11);
        const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
        for (int trial = 0; trial < 1024; ++trial) {
          std::uint64_t a = rng() & mask, b = rng() & mask;
          if (product_of(a, b) != gf_mult_ref(a, b, modulus, m))
            throw std::logic_error(spec.name() + ": wrong field product");
        }
      }
      break;
    }
  }
}

Circuit generate(const BenchSpec& spec) {
  switch (spec.family) {
    case BenchSpec::Family::mct_barenco:
      return gen_mct_barenco(spec.size);
    case BenchSpec::Family::mct_nc:
      return gen_mct_nc(spec.size);
    case BenchSpec::Family::gf_mult:
      return gen_gf_mult(spec.size, spec.modulus);
    case BenchSpec::Family::fixture:
      return ccz_fixture();
  }
  throw std::invalid_argument("unknown benchmark family");
}

}  // namespace

BenchReport run_benchmarks(std::span<const BenchSpec> specs,
                           std::span<const BenchPolicy> policies) {
  BenchReport report;
  for (const auto& spec : specs) {
    for (const auto& policy : policies) {
      BenchRow row;
      row.name = spec.name();
      row.ancillae_policy = policy.label();
      try {
        Circuit circuit = generate(spec);
        check_generated(spec, circuit);
        row.n = circuit.num_wires();

        const auto start = std::chrono::steady_clock::now();
        OptimizeResult result = optimize(circuit, {policy.resolve(circuit), true});
        const auto stop = std::chrono::steady_clock::now();
        row.seconds = std::chrono::duration<double>(stop - start).count();

        row.tc_before = result.before.t_count;
        row.tc_after = result.after.t_count;
        row.td_before = result.before.t_depth;
        row.td_after = result.after.t_depth;
        row.cnot_before = result.before.cnot_count;
        row.cnot_after = result.after.cnot_count;
        row.h_count = result.after.h_count;

        EquivalenceReport eq = check_summary(circuit, result.circuit);
        if (eq.ok() && std::max(circuit.num_wires(), result.circuit.num_wires()) <= 10) {
          EquivalenceReport uni = check_unitary(circuit, result.circuit);
          if (!uni.ok() || eq.verdict == Verdict::equal) eq = uni;
        }
        row.verify_verdict = std::string(to_string(eq.verdict));
        if (!eq.ok() && !eq.note.empty()) row.verify_verdict += " (" + eq.note + ")";
      } catch (const std::exception& e) {
        row.verify_verdict = std::string("error: ") + e.what();
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

constexpr const char* kColumns[] = {"name",        "n",          "ancillae_policy", "tc_before",
                                    "tc_after",    "td_before",  "td_after",        "cnot_before",
                                    "cnot_after",  "h_count",    "verify_verdict",  "seconds"};

void append_fields(std::ostringstream& out, const BenchRow& r, const char* sep) {
  out << r.name << sep << r.n << sep << r.ancillae_policy << sep << r.tc_before << sep
      << r.tc_after << sep << r.td_before << sep << r.td_after << sep << r.cnot_before << sep
      << r.cnot_after << sep << r.h_count << sep << r.verify_verdict << sep << r.seconds;
}

}  // namespace

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
  out << '\n';
  for (const auto& r : rows) {
    append_fields(out, r, ",");
    out << '\n';
  }
  return out.str();
}

std::string BenchReport::to_markdown() const {
  std::ostringstream out;
  out << '|';
  for (const auto* col : kColumns) out << ' ' << col << " |";
  out << "\n|";
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out << " --- |";
  out << '\n';
  for (const auto& r : rows) {
    out << "| ";
    append_fields(out, r, " | ");
    out << " |\n";
  }
  return out.str();
}

}  // namespace tpar
