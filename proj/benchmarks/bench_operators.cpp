// Copyright 2026 The ginibre-edge Authors
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

#include "ginibre_edge/fredholm.hpp"
#include "ginibre_edge/limit_laws.hpp"

using namespace ginibre_edge;

static void BM_PhiAlpha(benchmark::State& state) {
  const PhiAlphaLaw law{static_cast<double>(state.range(0))};
  double x = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_alpha(law, x));
    x = x < 6.0 ? x + 0.05 : -2.0;
  }
}
BENCHMARK(BM_PhiAlpha)->Arg(1)->Arg(10000)->Arg(1000000000);

static void BM_LimitEntry(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(limit_entry(7, 3, 0.5, 4.0));
}
BENCHMARK(BM_LimitEntry)->Unit(benchmark::kMicrosecond);

static void BM_AssembleLimitBlock(benchmark::State& state) {
  const double alpha = static_cast<double>(state.range(0));
  for (auto _ : state) {
    const auto block = assemble_limit_block(0.0, alpha);
    benchmark::DoNotOptimize(block.effective_dim());
  }
}
BENCHMARK(BM_AssembleLimitBlock)->Arg(1)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_FredholmDeterminant(benchmark::State& state) {
  const auto block = assemble_limit_block(0.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fredholm_log_det(block).log_abs);
}
BENCHMARK(BM_FredholmDeterminant)->Arg(1)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
