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

#include "tpar/optimizer.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "tpar/matroid.hpp"
#include "tpar/synthesis.hpp"

namespace tpar {

int plan_ancillae(const CircuitSummary& summary, const AncillaPolicy& policy) {
  if (policy.kind == AncillaPolicy::Kind::fixed) {
    if (policy.count < 0) throw std::invalid_argument("negative ancilla count");
    return summary.n + policy.count;
  }
  return summary.n;
}

namespace {

class Driver {
 public:
  Driver(const Circuit& input, const OptimizeOptions& options)
      : options_(options),
        prepared_(cancel_inverse_pairs(expand(cancel_inverse_pairs(input)))),
        summary_(summarize(prepared_)),
        unbounded_(options.ancillae.kind == AncillaPolicy::Kind::unbounded),
        n_eff_(plan_ancillae(summary_, options.ancillae)) {
    prune_trivial_hadamard_pairs(summary_);
    const auto width = static_cast<std::size_t>(summary_.width());
    for (int i = 0; i < n_eff_; ++i) {
      XorFunc f(width);
      if (i < summary_.m) f.set(static_cast<std::size_t>(i));
      current_.push_back(std::move(f));
    }
    pending_.assign(summary_.terms.terms().begin(), summary_.terms.terms().end());
  }

  Circuit run(const Circuit& input) {
    for (std::size_t ei = 0; ei < summary_.events.size(); ++ei) {
      const HadamardEvent& ev = summary_.events[ei];
      const bool last = ei + 1 == summary_.events.size();

      Echelon span_in = span_of(ev.q_in);
      admit(span_in);

      Echelon span_out = span_of(ev.q_out);
      flush_dying_blocks(span_out, last);

      if (span_out.rank() > span_in.rank()) repair(span_out.rank());

      emit_linear_to(ev.q_in);
      gates_.push_back(Gate::h(ev.target));
      current_[static_cast<std::size_t>(ev.target)] = XorFunc::unit(
          static_cast<std::size_t>(summary_.width()), static_cast<std::size_t>(ev.path_var));
      check_states_match(ev.q_out);
    }

    // final segment: everything left is computable over the final states
    Echelon span_fin = span_of(current_);
    admit(span_fin);
    if (!pending_.empty())
      throw std::logic_error("terms left unpartitioned after the final segment");
    for (auto& part : parts_) {
      for (auto& block : part.blocks) flush_block(block);
      part.blocks.clear();
    }
    emit_linear_to(summary_.q);

    return assemble(input);
  }

 private:
  Echelon span_of(const std::vector<XorFunc>& rows) const {
    Echelon e;
    for (const auto& r : rows) e.insert(r);
    return e;
  }

  Oracle oracle_for(std::size_t dim) const {
    return {dim, unbounded_ ? Oracle::kUnboundedWires : static_cast<std::size_t>(n_eff_)};
  }

  Partition& partition_for(const PhaseTerm& t) {
    return parts_[options_.split_parity && !t.odd() ? 1 : 0];
  }

  void admit(const Echelon& span) {
    const Oracle oracle = oracle_for(span.rank());
    for (auto it = pending_.begin(); it != pending_.end();) {
      if (span.contains(it->func)) {
        partition_add(*it, partition_for(*it), oracle);
        it = pending_.erase(it);
      } else {
        ++it;
      }
    }
  }

  void flush_dying_blocks(const Echelon& span_out, bool last) {
    for (auto& part : parts_) {
      std::vector<std::vector<PhaseTerm>> kept;
      for (auto& block : part.blocks) {
        bool dies = last;
        if (!dies)
          for (const auto& t : block)
            if (!span_out.contains(t.func)) {
              dies = true;
              break;
            }
        if (dies)
          flush_block(block);
        else
          kept.push_back(std::move(block));
      }
      part.blocks = std::move(kept);
    }
  }

  void repair(std::size_t new_dim) {
    const Oracle grown = oracle_for(new_dim);
    for (auto& part : parts_) {
      auto evicted = repair_on_dim_increase(part, grown);
      pending_.insert(pending_.end(), evicted.begin(), evicted.end());
    }
  }

  void flush_block(const std::vector<PhaseTerm>& block) {
    if (block.empty()) return;
    // wires the block needs: |A| plus fill rows up to the space dimension
    Echelon block_span;
    for (const auto& t : block) block_span.insert(t.func);
    const std::size_t dim = span_of(current_).rank();
    const std::size_t needed = block.size() + dim - block_span.rank();
    if (needed > static_cast<std::size_t>(n_eff_)) {
      if (!unbounded_)
        throw std::logic_error("block exceeds the fixed wire budget");
      grow_wires(static_cast<int>(needed));
    }
    SynthesisRequest req{block, current_, current_, std::nullopt};
    auto stage = synthesize_block_gates(req);
    gates_.insert(gates_.end(), stage.begin(), stage.end());
  }

  void grow_wires(int new_n) {
    for (int i = n_eff_; i < new_n; ++i)
      current_.emplace_back(static_cast<std::size_t>(summary_.width()));
    n_eff_ = new_n;
  }

  // linear stage taking the working states to the target snapshot (padded
  // with zero rows for granted ancillae)
  void emit_linear_to(const std::vector<XorFunc>& snapshot) {
    std::vector<XorFunc> target = snapshot;
    while (target.size() < static_cast<std::size_t>(n_eff_))
      target.emplace_back(static_cast<std::size_t>(summary_.width()));
    auto stage = linear_stage(current_, target);
    gates_.insert(gates_.end(), stage.begin(), stage.end());
    current_ = std::move(target);
  }

  void check_states_match(const std::vector<XorFunc>& snapshot) const {
    for (std::size_t i = 0; i < current_.size(); ++i) {
      const bool ok = i < snapshot.size()
                          ? current_[i] == snapshot[i]
                          : current_[i].mask_zero() && !current_[i].parity();
      if (!ok) throw std::logic_error("working states diverged from the summary");
    }
  }

  Circuit assemble(const Circuit& input) const {
    Circuit out;
    out.wire_names = input.wire_names;
    out.num_inputs = input.num_inputs;
    std::unordered_set<std::string> taken(out.wire_names.begin(), out.wire_names.end());
    int suffix = 0;
    while (out.num_wires() < n_eff_) {
      std::string name = "anc" + std::to_string(suffix++);
      if (taken.count(name)) continue;
      out.wire_names.push_back(name);
    }
    out.gates = gates_;
    // adjacent compute/uncompute stages leave removable pairs behind
    return cancel_inverse_pairs(out);
  }

  OptimizeOptions options_;
  Circuit prepared_;
  CircuitSummary summary_;
  bool unbounded_;
  int n_eff_;
  std::vector<XorFunc> current_;
  std::deque<PhaseTerm> pending_;
  std::array<Partition, 2> parts_;
  std::vector<Gate> gates_;
};

}  // namespace

OptimizeResult optimize(const Circuit& c, const OptimizeOptions& options) {
  OptimizeResult result;
  result.before = metrics(c);
  Driver driver(c, options);
  result.circuit = driver.run(c);
  result.after = metrics(result.circuit);
  return result;
}

}  // namespace tpar
