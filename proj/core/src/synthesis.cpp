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

#include "tpar/synthesis.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpar {

std::vector<XorFunc> extend_to_basis(std::span<const PhaseTerm> block,
                                     std::span<const XorFunc> q_in) {
  const std::size_t n = q_in.size();
  Echelon span_in;
  for (const auto& row : q_in) span_in.insert(row);
  const std::size_t target_rank = span_in.rank();

  std::vector<XorFunc> rows;
  rows.reserve(n);
  Echelon built;
  for (const auto& t : block) {
    if (!span_in.contains(t.func))
      throw std::invalid_argument("block term outside the input state space");
    if (rows.size() >= n) throw std::invalid_argument("block larger than the wire count");
    built.insert(t.func);
    rows.push_back(t.func);
  }
  for (const auto& row : q_in) {
    if (built.rank() >= target_rank) break;
    if (built.insert(row)) {
      if (rows.size() >= n) throw std::invalid_argument("block not computable on this wire count");
      XorFunc r = row;
      r.set_parity(false);
      rows.push_back(std::move(r));
    }
  }
  if (built.rank() != target_rank)
    throw std::logic_error("failed to extend block to the input rank");
  const std::size_t width = q_in.empty() ? 0 : q_in[0].width();
  while (rows.size() < n) rows.emplace_back(width);
  return rows;
}

namespace {

std::vector<Gate> ops_to_gates(std::span<const RowOp> ops, bool reversed) {
  std::vector<Gate> gates;
  gates.reserve(ops.size());
  auto emit = [&](const RowOp& op) {
    if (op.kind == RowOp::Kind::add_row)
      gates.push_back(Gate::cnot(op.source, op.target));
    else
      gates.push_back(Gate::x(op.target));
  };
  if (reversed)
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) emit(*it);
  else
    for (const auto& op : ops) emit(op);
  return gates;
}

}  // namespace

std::vector<Gate> linear_stage(std::span<const XorFunc> from, std::span<const XorFunc> to) {
  if (from.size() != to.size())
    throw std::invalid_argument("linear_stage: wire count mismatch");
  if (from.empty()) return {};
  if (std::equal(from.begin(), from.end(), to.begin(),
                 [](const XorFunc& a, const XorFunc& b) { return a == b; }))
    return {};

  auto [basis_from, ops_from] = eliminate_with_ops({from.begin(), from.end()});
  auto [basis_to, ops_to] = eliminate_with_ops({to.begin(), to.end()});
  if (!(basis_from == basis_to))
    throw std::invalid_argument("linear_stage: target states span a different space");

  std::vector<Gate> gates = ops_to_gates(ops_from, false);
  auto back = ops_to_gates(ops_to, true);
  gates.insert(gates.end(), back.begin(), back.end());
  return gates;
}

std::vector<Gate> phase_stage(std::span<const PhaseTerm> block) {
  std::vector<Gate> gates;
  for (std::size_t i = 0; i < block.size(); ++i) {
    const int wire = static_cast<int>(i);
    switch (block[i].coeff) {
      case 1:
        gates.push_back(Gate::t(wire));
        break;
      case 2:
        gates.push_back(Gate::p(wire));
        break;
      case 3:
        gates.push_back(Gate::p(wire));
        gates.push_back(Gate::t(wire));
        break;
      case 4:
        gates.push_back(Gate::z(wire));
        break;
      case 5:
        gates.push_back(Gate::z(wire));
        gates.push_back(Gate::t(wire));
        break;
      case 6:
        gates.push_back(Gate::pdg(wire));
        break;
      case 7:
        gates.push_back(Gate::tdg(wire));
        break;
      default:
        throw std::invalid_argument("phase term coefficient out of range");
    }
  }
  return gates;
}

std::vector<Gate> synthesize_block_gates(const SynthesisRequest& request) {
  if (!request.hadamard &&
      !std::equal(request.q_in.begin(), request.q_in.end(), request.q_out.begin(),
                  request.q_out.end(), [](const XorFunc& a, const XorFunc& b) { return a == b; }))
    throw std::invalid_argument("q_out must equal q_in unless a Hadamard is requested");

  std::vector<Gate> gates;
  if (!request.block.empty()) {
    auto extended = extend_to_basis(request.block, request.q_in);
    auto compute = linear_stage(request.q_in, extended);
    auto phases = phase_stage(request.block);
    gates = compute;
    gates.insert(gates.end(), phases.begin(), phases.end());
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) gates.push_back(*it);
  }
  if (request.hadamard) gates.push_back(Gate::h(request.hadamard->first));
  return gates;
}

Circuit synthesize_block(const SynthesisRequest& request) {
  Circuit c;
  c.num_inputs = static_cast<int>(request.q_in.size());
  for (std::size_t i = 0; i < request.q_in.size(); ++i)
    c.wire_names.push_back("w" + std::to_string(i));
  c.gates = synthesize_block_gates(request);
  return c;
}

}  // namespace tpar
