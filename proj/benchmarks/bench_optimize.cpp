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

#include "tpar/bench.hpp"
#include "tpar/optimizer.hpp"

namespace {

void BM_OptimizeGfMult(benchmark::State& state) {
  tpar::Circuit c = tpar::gen_gf_mult(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tpar::optimize(c));
}

void BM_OptimizeGfMultUnbounded(benchmark::State& state) {
  tpar::Circuit c = tpar::gen_gf_mult(static_cast<int>(state.range(0)));
  tpar::OptimizeOptions options;
  options.ancillae = tpar::AncillaPolicy::unbounded();
  for (auto _ : state) benchmark::DoNotOptimize(tpar::optimize(c, options));
}

void BM_OptimizeMctBarenco(benchmark::State& state) {
  tpar::Circuit c = tpar::gen_mct_barenco(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tpar::optimize(c));
}

}  // namespace

BENCHMARK(BM_OptimizeGfMult)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeGfMultUnbounded)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeMctBarenco)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
