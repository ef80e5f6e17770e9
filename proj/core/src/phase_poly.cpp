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

#include "tpar/phase_poly.hpp"

#include <stdexcept>

namespace tpar {

void TermSet::merge(int coeff, XorFunc func) {
  coeff = ((coeff % 8) + 8) % 8;
  if (func.parity()) {
    // c*(1 xor f) = c - c*f up to the discarded constant phase w^c
    coeff = (8 - coeff) % 8;
    func.set_parity(false);
  }
  if (coeff == 0 || func.mask_zero()) return;

  auto it = index_.find(func);
  if (it == index_.end()) {
    index_.emplace(func, terms_.size());
    terms_.push_back({static_cast<std::uint8_t>(coeff), std::move(func)});
    return;
  }
  std::size_t pos = it->second;
  int merged = (terms_[pos].coeff + coeff) % 8;
  if (merged == 0) {
    terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(pos));
    reindex();
  } else {
    terms_[pos].coeff = static_cast<std::uint8_t>(merged);
  }
}

void TermSet::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i].func, i);
}

namespace {

int coeff_for(GateKind kind) {
  switch (kind) {
    case GateKind::T:
      return 1;
    case GateKind::P:
      return 2;
    case GateKind::Z:
    case GateKind::Y:
      return 4;
    case GateKind::Pdg:
      return 6;
    case GateKind::Tdg:
      return 7;
    default:
      return 0;
  }
}

}  // namespace

CircuitSummary initial_summary(int wires, int inputs, int max_events) {
  CircuitSummary s;
  s.n = wires;
  s.m = inputs;
  const auto width = static_cast<std::size_t>(inputs + max_events);
  s.q.reserve(static_cast<std::size_t>(wires));
  for (int i = 0; i < wires; ++i) {
    XorFunc f(width);
    if (i < inputs) f.set(static_cast<std::size_t>(i));
    s.q.push_back(std::move(f));
  }
  return s;
}

void fold_gates(const std::vector<Gate>& gates, CircuitSummary& summary) {
  auto& q = summary.q;
  for (const auto& g : gates) {
    const auto w0 = static_cast<std::size_t>(g.wires[0]);
    switch (g.kind) {
      case GateKind::X:
        q[w0].flip_parity();
        break;
      case GateKind::Y:
        summary.terms.merge(4, q[w0]);
        q[w0].flip_parity();
        break;
      case GateKind::Z:
      case GateKind::P:
      case GateKind::Pdg:
      case GateKind::T:
      case GateKind::Tdg:
        summary.terms.merge(coeff_for(g.kind), q[w0]);
        break;
      case GateKind::Cnot:
        q[static_cast<std::size_t>(g.wires[1])] ^= q[w0];
        break;
      case GateKind::H: {
        HadamardEvent ev;
        ev.target = g.wires[0];
        ev.path_var = summary.m + summary.k();
        if (ev.path_var >= summary.width())
          throw std::logic_error("path-variable capacity exhausted; widen the summary");
        ev.q_in = q;
        q[w0] = XorFunc::unit(static_cast<std::size_t>(summary.width()),
                              static_cast<std::size_t>(ev.path_var));
        ev.q_out = q;
        summary.events.push_back(std::move(ev));
        break;
      }
      case GateKind::Toffoli:
        throw std::invalid_argument("summarize requires a Toffoli-free circuit; expand first");
    }
  }
}

CircuitSummary summarize(const Circuit& c) {
  int h_count = 0;
  for (const auto& g : c.gates)
    if (g.kind == GateKind::H) ++h_count;
  CircuitSummary s = initial_summary(c.num_wires(), c.num_inputs, h_count);
  fold_gates(c.gates, s);
  return s;
}

namespace {

// replace variable `var` by the (affine) state g in f
void substitute(XorFunc& f, int var, const XorFunc& g) {
  if (!f.test(static_cast<std::size_t>(var))) return;
  f.reset(static_cast<std::size_t>(var));
  f ^= g;
}

bool var_used_outside_wire(const CircuitSummary& s, int var, int wire, std::size_t from_event) {
  for (const auto& t : s.terms.terms())
    if (t.func.test(static_cast<std::size_t>(var))) return true;
  auto rows_use = [&](const std::vector<XorFunc>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (static_cast<int>(r) != wire && rows[r].test(static_cast<std::size_t>(var))) return true;
    return false;
  };
  for (std::size_t l = from_event; l < s.events.size(); ++l)
    if (rows_use(s.events[l].q_in) || rows_use(s.events[l].q_out)) return true;
  return rows_use(s.q);
}

bool remove_one_trivial_pair(CircuitSummary& s) {
  for (std::size_t i = 0; i < s.events.size(); ++i) {
    const int wire = s.events[i].target;
    const int u = s.events[i].path_var;
    std::size_t j = i + 1;
    while (j < s.events.size() && s.events[j].target != wire) ++j;
    if (j >= s.events.size()) continue;

    // the first path variable must sit on its wire (bit flips allowed) up
    // to the second event and appear nowhere else
    const XorFunc unit_u = XorFunc::unit(static_cast<std::size_t>(s.width()),
                                         static_cast<std::size_t>(u));
    bool clean = !var_used_outside_wire(s, u, wire, i + 1);
    for (std::size_t l = i + 1; l <= j && clean; ++l)
      clean = s.events[l].q_in[static_cast<std::size_t>(wire)].mask_equal(unit_u);
    for (std::size_t l = i + 1; l < j && clean; ++l)
      clean = s.events[l].q_out[static_cast<std::size_t>(wire)].mask_equal(unit_u);
    if (!clean) continue;

    const XorFunc before = s.events[i].q_in[static_cast<std::size_t>(wire)];
    // H X H = Z: a net bit flip between the pair leaves a Z-strength phase
    // on the restored state
    const bool flipped = s.events[j].q_in[static_cast<std::size_t>(wire)].parity();
    const int v = s.events[j].path_var;
    auto rewrite_rows = [&](std::vector<XorFunc>& rows) {
      for (auto& row : rows) {
        substitute(row, u, before);
        substitute(row, v, before);
      }
    };
    for (auto& ev : s.events) {
      rewrite_rows(ev.q_in);
      rewrite_rows(ev.q_out);
    }
    rewrite_rows(s.q);
    TermSet rewritten;
    for (const auto& t : s.terms.terms()) {
      XorFunc f = t.func;
      substitute(f, u, before);
      substitute(f, v, before);
      rewritten.merge(t.coeff, std::move(f));
    }
    if (flipped) rewritten.merge(4, before);
    s.terms = std::move(rewritten);
    s.events.erase(s.events.begin() + static_cast<std::ptrdiff_t>(j));
    s.events.erase(s.events.begin() + static_cast<std::ptrdiff_t>(i));
    return true;
  }
  return false;
}

void compact_path_vars(CircuitSummary& s) {
  const std::size_t new_width = static_cast<std::size_t>(s.m + s.k());
  std::vector<int> var_map(static_cast<std::size_t>(s.width()), -1);
  for (int i = 0; i < s.m; ++i) var_map[static_cast<std::size_t>(i)] = i;
  for (int e = 0; e < s.k(); ++e)
    var_map[static_cast<std::size_t>(s.events[static_cast<std::size_t>(e)].path_var)] = s.m + e;

  auto remap = [&](const XorFunc& f) {
    XorFunc out(new_width);
    for (std::size_t bit = 0; bit < f.width(); ++bit) {
      if (!f.test(bit)) continue;
      if (var_map[bit] < 0) throw std::logic_error("pruned path variable still referenced");
      out.set(static_cast<std::size_t>(var_map[bit]));
    }
    out.set_parity(f.parity());
    return out;
  };

  for (auto& ev : s.events) {
    ev.path_var = var_map[static_cast<std::size_t>(ev.path_var)];
    for (auto& row : ev.q_in) row = remap(row);
    for (auto& row : ev.q_out) row = remap(row);
  }
  for (auto& row : s.q) row = remap(row);
  TermSet rewritten;
  for (const auto& t : s.terms.terms()) rewritten.merge(t.coeff, remap(t.func));
  s.terms = std::move(rewritten);
}

}  // namespace

int prune_trivial_hadamard_pairs(CircuitSummary& summary) {
  int removed = 0;
  while (remove_one_trivial_pair(summary)) ++removed;
  if (removed > 0) compact_path_vars(summary);
  return removed;
}

SimulationResult simulate_cnot_t(const Circuit& c, const std::vector<bool>& input) {
  if (static_cast<int>(input.size()) != c.num_inputs)
    throw std::invalid_argument("input length must equal the circuit's input count");
  std::vector<bool> bits(static_cast<std::size_t>(c.num_wires()), false);
  for (int i = 0; i < c.num_inputs; ++i)
    bits[static_cast<std::size_t>(i)] = input[static_cast<std::size_t>(i)];

  int exponent = 0;
  for (const auto& g : c.gates) {
    const auto w0 = static_cast<std::size_t>(g.wires[0]);
    switch (g.kind) {
      case GateKind::X:
        bits[w0] = !bits[w0];
        break;
      case GateKind::Z:
      case GateKind::P:
      case GateKind::Pdg:
      case GateKind::T:
      case GateKind::Tdg:
        if (bits[w0]) exponent = (exponent + coeff_for(g.kind)) % 8;
        break;
      case GateKind::Cnot: {
        const auto w1 = static_cast<std::size_t>(g.wires[1]);
        bits[w1] = bits[w1] != bits[w0];
        break;
      }
      default:
        throw std::invalid_argument("simulate_cnot_t supports {CNOT, T-powers, X} only");
    }
  }
  return {static_cast<std::uint8_t>(exponent), std::move(bits)};
}

}  // namespace tpar
