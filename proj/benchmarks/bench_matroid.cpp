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

#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <vector>

#include "tpar/matroid.hpp"

namespace {

std::vector<tpar::PhaseTerm> random_terms(std::size_t count, std::size_t width,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<tpar::PhaseTerm> terms;
  std::set<std::vector<bool>> seen;
  while (terms.size() < count) {
    tpar::XorFunc f(width);
    std::vector<bool> bits(width);
    for (std::size_t j = 0; j < width; ++j)
      if (rng() & 1u) {
        f.set(j);
        bits[j] = true;
      }
    if (f.mask_zero() || !seen.insert(bits).second) continue;
    terms.push_back({static_cast<std::uint8_t>(1 + rng() % 7), std::move(f)});
  }
  return terms;
}

void BM_PartitionAll(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const std::size_t wires = 16;
  auto terms = random_terms(count, wires, 5);
  tpar::Oracle oracle{wires, wires};
  for (auto _ : state) benchmark::DoNotOptimize(tpar::partition_all(terms, oracle));
}

void BM_PartitionAllUnbounded(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  auto terms = random_terms(count, 16, 6);
  tpar::Oracle oracle{16, tpar::Oracle::kUnboundedWires};
  for (auto _ : state) benchmark::DoNotOptimize(tpar::partition_all(terms, oracle));
}

}  // namespace

BENCHMARK(BM_PartitionAll)->Arg(16)->Arg(48)->Arg(96);
BENCHMARK(BM_PartitionAllUnbounded)->Arg(48)->Arg(96);

BENCHMARK_MAIN();
