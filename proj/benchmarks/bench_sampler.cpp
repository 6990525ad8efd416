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

#include <cstdint>

#include "ginibre_edge/gamma_product.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/rng.hpp"
#include "ginibre_edge/sampler.hpp"
#include "ginibre_edge/scaling.hpp"

using namespace ginibre_edge;

static void BM_PhiloxWords(benchmark::State& state) {
  Philox4x32 rng(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rng());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxWords);

static void BM_LogGamma(benchmark::State& state) {
  Philox4x32 rng(3, 4);
  const double shape = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_log_gamma(shape, rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LogGamma)->Arg(1)->Arg(32)->Arg(1000);

// Spectral radius draws at n = k = 32 on one thread; items/s times 60 is the
// per-minute throughput.
static void BM_SpectralRadius(benchmark::State& state) {
  set_thread_count(1);
  const EnsembleParams p(state.range(0), state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_spectral_radius(p, 1000, ++seed));
  state.SetItemsProcessed(state.iterations() * 1000);
  set_thread_count(0);
}
BENCHMARK(BM_SpectralRadius)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
