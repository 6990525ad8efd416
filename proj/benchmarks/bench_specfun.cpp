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

#include "ginibre_edge/gamma_product.hpp"
#include "ginibre_edge/specfun.hpp"

namespace sf = ginibre_edge::specfun;

static void BM_Digamma(benchmark::State& state) {
  double z = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::digamma(z));
    z = z < 500.0 ? z * 1.7 : 0.3;
  }
}
BENCHMARK(BM_Digamma);

static void BM_Trigamma(benchmark::State& state) {
  double z = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::polygamma(1, z));
    z = z < 500.0 ? z * 1.7 : 0.3;
  }
}
BENCHMARK(BM_Trigamma);

static void BM_NormalSf(benchmark::State& state) {
  const double x0 = static_cast<double>(state.range(0));
  double x = x0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::normal_sf(x));
    x = x < x0 + 4.0 ? x + 0.01 : x0;
  }
}
BENCHMARK(BM_NormalSf)->Arg(-4)->Arg(4)->Arg(20);

static void BM_GammaUpper(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  double z = 0.5 * a;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sf::gamma_upper_reg(a, z));
    z = z < 1.5 * a ? z + 0.01 * a : 0.5 * a;
  }
}
BENCHMARK(BM_GammaUpper)->Arg(3)->Arg(1000)->Arg(1000000);

static void BM_EdgeworthTail(benchmark::State& state) {
  const ginibre_edge::GammaProductDist d(40, 500);
  double t = d.mean();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ginibre_edge::tail(d, t, ginibre_edge::Edgeworth{}).probability);
    t = t < d.mean() + 4.0 * d.stddev() ? t + 0.01 * d.stddev() : d.mean();
  }
}
BENCHMARK(BM_EdgeworthTail);

BENCHMARK_MAIN();
