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
#include <vector>

#include "tpar/gf2.hpp"

namespace {

std::vector<tpar::XorFunc> random_rows(std::size_t n, std::size_t width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<tpar::XorFunc> rows;
  for (std::size_t i = 0; i < n; ++i) {
    tpar::XorFunc f(width);
    for (std::size_t j = 0; j < width; ++j)
      if (rng() & 1u) f.set(j);
    rows.push_back(std::move(f));
  }
  return rows;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rows = random_rows(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tpar::rank(rows));
}

void BM_InSpan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rows = random_rows(n, n, 2);
  auto probe = random_rows(1, n, 3)[0];
  for (auto _ : state) benchmark::DoNotOptimize(tpar::in_span(probe, rows));
}

void BM_EliminateWithOps(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rows = random_rows(n, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(tpar::eliminate_with_ops(rows));
}

}  // namespace

BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_InSpan)->Arg(16)->Arg(64)->Arg(128);
BENCHMARK(BM_EliminateWithOps)->Arg(16)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
