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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tpar {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::equal:
      return "equal";
    case Verdict::equal_up_to_global_phase:
      return "equal-up-to-global-phase";
    case Verdict::different:
      return "different";
  }
  return "?";
}

namespace {

constexpr double kTolerance = 1e-9;

using Amplitudes = std::vector<std::complex<double>>;

std::complex<double> omega_power(int k) {
  const double angle = std::numbers::pi / 4.0 * static_cast<double>(((k % 8) + 8) % 8);
  return {std::cos(angle), std::sin(angle)};
}

void apply_gate(Amplitudes& amp, const Gate& g, int wires) {
  const std::size_t dim = std::size_t{1} << wires;
  auto bit = [](std::size_t state, int wire) { return (state >> wire) & 1u; };
  switch (g.kind) {
    case GateKind::X: {
      const std::size_t mask = std::size_t{1} << g.wires[0];
      for (std::size_t s = 0; s < dim; ++s)
        if (!bit(s, g.wires[0])) std::swap(amp[s], amp[s | mask]);
      break;
    }
    case GateKind::Y: {
      const std::size_t mask = std::size_t{1} << g.wires[0];
      const std::complex<double> i{0.0, 1.0};
      for (std::size_t s = 0; s < dim; ++s)
        if (!bit(s, g.wires[0])) {
          auto a0 = amp[s], a1 = amp[s | mask];
          amp[s] = -i * a1;
          amp[s | mask] = i * a0;
        }
      break;
    }
    case GateKind::Z:
    case GateKind::P:
    case GateKind::Pdg:
    case GateKind::T:
    case GateKind::Tdg: {
      int k = 0;
      if (g.kind == GateKind::Z) k = 4;
      if (g.kind == GateKind::P) k = 2;
      if (g.kind == GateKind::Pdg) k = 6;
      if (g.kind == GateKind::T) k = 1;
      if (g.kind == GateKind::Tdg) k = 7;
      const auto phase = omega_power(k);
      for (std::size_t s = 0; s < dim; ++s)
        if (bit(s, g.wires[0])) amp[s] *= phase;
      break;
    }
    case GateKind::H: {
      const std::size_t mask = std::size_t{1} << g.wires[0];
      const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
      for (std::size_t s = 0; s < dim; ++s)
        if (!bit(s, g.wires[0])) {
          auto a0 = amp[s], a1 = amp[s | mask];
          amp[s] = inv_sqrt2 * (a0 + a1);
          amp[s | mask] = inv_sqrt2 * (a0 - a1);
        }
      break;
    }
    case GateKind::Cnot: {
      const std::size_t mask = std::size_t{1} << g.wires[1];
      for (std::size_t s = 0; s < dim; ++s)
        if (bit(s, g.wires[0]) && !bit(s, g.wires[1])) std::swap(amp[s], amp[s | mask]);
      break;
    }
    case GateKind::Toffoli: {
      const std::size_t mask = std::size_t{1} << g.wires[2];
      for (std::size_t s = 0; s < dim; ++s)
        if (bit(s, g.wires[0]) && bit(s, g.wires[1]) && !bit(s, g.wires[2]))
          std::swap(amp[s], amp[s | mask]);
      break;
    }
  }
}

std::string format_bits(std::size_t value, int bits) {
  std::string s;
  for (int i = 0; i < bits; ++i) s.push_back((value >> i) & 1u ? '1' : '0');
  return s;
}

EquivalenceReport different(std::string witness, std::string note, double err = 0.0) {
  EquivalenceReport r;
  r.verdict = Verdict::different;
  r.witness = std::move(witness);
  r.note = std::move(note);
  r.max_amplitude_error = err;
  return r;
}

}  // namespace

std::vector<std::complex<double>> simulate_statevector(const Circuit& c,
                                                       const std::vector<bool>& input) {
  const int n = c.num_wires();
  if (n > 24) throw std::invalid_argument("statevector simulation capped at 24 wires");
  if (static_cast<int>(input.size()) != c.num_inputs)
    throw std::invalid_argument("input length must equal the circuit's input count");
  std::size_t index = 0;
  for (int i = 0; i < c.num_inputs; ++i)
    if (input[static_cast<std::size_t>(i)]) index |= std::size_t{1} << i;
  Amplitudes amp(std::size_t{1} << n, 0.0);
  amp[index] = 1.0;
  for (const auto& g : c.gates) apply_gate(amp, g, n);
  return amp;
}

EquivalenceReport check_summary(const Circuit& a, const Circuit& b) {
  CircuitSummary sa = summarize(cancel_inverse_pairs(expand(cancel_inverse_pairs(a))));
  CircuitSummary sb = summarize(cancel_inverse_pairs(expand(cancel_inverse_pairs(b))));
  prune_trivial_hadamard_pairs(sa);
  prune_trivial_hadamard_pairs(sb);

  if (sa.m != sb.m) return different("", "input counts differ");
  if (sa.k() != sb.k())
    return different(std::string(static_cast<std::size_t>(sa.width()), '0'),
                     "Hadamard skeletons differ (" + std::to_string(sa.k()) + " vs " +
                         std::to_string(sb.k()) + " events)");

  const int width = sa.width();
  auto states_match = [&](const std::vector<XorFunc>& qa, const std::vector<XorFunc>& qb) {
    const std::size_t common = std::min(qa.size(), qb.size());
    for (std::size_t i = 0; i < common; ++i)
      if (!(qa[i] == qb[i])) return false;
    for (std::size_t i = common; i < qa.size(); ++i)
      if (!qa[i].mask_zero() || qa[i].parity()) return false;
    for (std::size_t i = common; i < qb.size(); ++i)
      if (!qb[i].mask_zero() || qb[i].parity()) return false;
    return true;
  };

  // Only the destroyed state of each event enters the path-sum phase (the
  // interference term couples the fresh variable to it), so comparing it
  // per event is sound; states of untargeted wires may differ freely in
  // between and are pinned again by the final states.
  for (int i = 0; i < sa.k(); ++i) {
    const auto& ea = sa.events[static_cast<std::size_t>(i)];
    const auto& eb = sb.events[static_cast<std::size_t>(i)];
    if (ea.target != eb.target)
      return different(std::string(static_cast<std::size_t>(width), '0'),
                       "Hadamard target differs at event " + std::to_string(i));
    if (!(ea.q_in[static_cast<std::size_t>(ea.target)] ==
          eb.q_in[static_cast<std::size_t>(eb.target)]))
      return different(std::string(static_cast<std::size_t>(width), '0'),
                       "destroyed state differs at event " + std::to_string(i));
  }
  if (!states_match(sa.q, sb.q))
    return different(std::string(static_cast<std::size_t>(width), '0'), "final states differ");

  // net phase difference: merge one side against the negation of the other
  TermSet diff;
  for (const auto& t : sa.terms.terms()) diff.merge(t.coeff, t.func);
  for (const auto& t : sb.terms.terms()) diff.merge(8 - t.coeff, t.func);
  if (diff.size() != 0) {
    const auto& t = diff.terms().front();
    std::string witness(static_cast<std::size_t>(width), '0');
    int var = t.func.lowest_set();
    if (var >= 0) witness[static_cast<std::size_t>(var)] = '1';
    return different(std::move(witness),
                     "phase terms differ by " + std::to_string(int(t.coeff)) + " * pi/4 on a mask");
  }

  EquivalenceReport r;
  r.verdict = Verdict::equal;
  return r;
}

EquivalenceReport check_unitary(const Circuit& a, const Circuit& b, int max_wires) {
  const Circuit* narrow = &a;
  const Circuit* wide = &b;
  if (wide->num_wires() < narrow->num_wires()) std::swap(wide, narrow);
  if (wide->num_wires() > max_wires)
    throw std::invalid_argument("check_unitary: too many wires (" +
                                std::to_string(wide->num_wires()) + " > " +
                                std::to_string(max_wires) + ")");
  if (a.num_inputs != b.num_inputs) return different("", "input counts differ");

  const int n_narrow = narrow->num_wires();
  const int m = narrow->num_inputs;
  const std::size_t narrow_dim = std::size_t{1} << n_narrow;

  std::complex<double> global_phase = 0.0;
  bool phase_locked = false;
  double max_err = 0.0;

  // basis inputs range over the data wires; all other wires are |0>
  // ancillae, and the wider circuit's extras must return to |0>
  for (std::size_t x = 0; x < narrow_dim; ++x) {
    bool skip = false;
    for (int i = m; i < n_narrow; ++i)
      if ((x >> i) & 1u) skip = true;
    if (skip) continue;

    std::vector<bool> data(static_cast<std::size_t>(m), false);
    for (int i = 0; i < m; ++i) data[static_cast<std::size_t>(i)] = (x >> i) & 1u;
    Amplitudes va = simulate_statevector(*narrow, data);
    Amplitudes vb = simulate_statevector(*wide, data);

    Amplitudes vb_folded(narrow_dim, 0.0);
    for (std::size_t s = 0; s < vb.size(); ++s) {
      if ((s >> n_narrow) == 0) {
        vb_folded[s] = vb[s];
      } else if (std::abs(vb[s]) > kTolerance) {
        return different(format_bits(x, n_narrow), "granted ancillae do not return to |0>",
                         std::abs(vb[s]));
      }
    }

    if (!phase_locked) {
      std::size_t best = 0;
      for (std::size_t s = 1; s < narrow_dim; ++s)
        if (std::abs(va[s]) > std::abs(va[best])) best = s;
      if (std::abs(va[best]) > 1e-6) {
        global_phase = vb_folded[best] / va[best];
        phase_locked = true;
      }
    }
    for (std::size_t s = 0; s < narrow_dim; ++s) {
      const double err = std::abs(vb_folded[s] - global_phase * va[s]);
      max_err = std::max(max_err, err);
      if (err > kTolerance)
        return different(format_bits(x, n_narrow), "amplitudes differ", err);
    }
  }

  EquivalenceReport r;
  r.max_amplitude_error = max_err;
  r.verdict = std::abs(global_phase - std::complex<double>{1.0, 0.0}) <= kTolerance
                  ? Verdict::equal
                  : Verdict::equal_up_to_global_phase;
  return r;
}

namespace {

bool min_partition_search(std::span<const PhaseTerm> terms, std::size_t next,
                          std::vector<std::vector<PhaseTerm>>& blocks, const Oracle& oracle,
                          std::size_t budget) {
  if (blocks.size() > budget) return false;
  if (next == terms.size()) return true;
  const PhaseTerm& t = terms[next];
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(t);
    if (oracle.is_independent(blocks[b]) &&
        min_partition_search(terms, next + 1, blocks, oracle, budget))
      return true;
    blocks[b].pop_back();
  }
  if (blocks.size() < budget) {
    blocks.push_back({t});
    if (min_partition_search(terms, next + 1, blocks, oracle, budget)) return true;
    blocks.pop_back();
  }
  return false;
}

}  // namespace

int brute_force_min_partition(std::span<const PhaseTerm> terms, const Oracle& oracle) {
  if (terms.size() > 9)
    throw std::invalid_argument("brute_force_min_partition capped at 9 terms");
  if (terms.empty()) return 0;
  for (std::size_t budget = 1; budget <= terms.size(); ++budget) {
    std::vector<std::vector<PhaseTerm>> blocks;
    if (min_partition_search(terms, 0, blocks, oracle, budget))
      return static_cast<int>(budget);
  }
  throw std::logic_error("no valid partition found (singletons must be independent)");
}

}  // namespace tpar
