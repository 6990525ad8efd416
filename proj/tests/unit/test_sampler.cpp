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


#include <doctest.h>

#include <chrono>
#include <cmath>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/finite_n.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/sampler.hpp"
#include "ginibre_edge/specfun.hpp"
#include "oracles/oracles.hpp"

using namespace ginibre_edge;

TEST_CASE("empirical cdf") {
  const EmpiricalCdf e({3.0, 1.0, 2.0, 2.0});
  CHECK(e.count() == 4);
  CHECK(e.sorted_samples() == std::vector<double>{1.0, 2.0, 2.0, 3.0});
  CHECK(e(0.5) == 0.0);
  CHECK(e(2.0) == 0.75);
  CHECK(e(10.0) == 1.0);
  CHECK_THROWS_AS(EmpiricalCdf({}), DomainError);
}

TEST_CASE("Kolmogorov-Smirnov statistic") {
  const EmpiricalCdf single({0.3});
  const double f = oracle::normal_cdf(0.3);
  CHECK(ks_distance(single, specfun::normal_cdf) == doctest::Approx(std::max(f, 1.0 - f)).epsilon(1e-15));

  const int n = 999;
  std::vector<double> q;
  for (int i = 1; i <= n; ++i) q.push_back(boost::math::erfc_inv(2.0 * (1.0 - i / (n + 1.0))) * std::sqrt(2.0));
  CHECK(ks_distance(EmpiricalCdf(q), specfun::normal_cdf) <= 1.0 / (n + 1.0) + 1e-12);

  std::vector<double> u;
  for (int i = 0; i < 1000; ++i) u.push_back((i + 0.5) / 1000.0);
  double want = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double fx = oracle::normal_cdf(u[i]);
    want = std::max({want, std::fabs((i + 1) / 1000.0 - fx), std::fabs(i / 1000.0 - fx)});
  }
  const double ks = ks_distance(EmpiricalCdf(u), specfun::normal_cdf);
  CHECK(ks == doctest::Approx(want).epsilon(1e-14));
  CHECK(ks == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("one exponential has a known law") {
  const EnsembleParams one(1, 1);
  const std::size_t count = 100000;
  const auto e = sample_spectral_radius(one, count, 2024);
  const auto c = limit_constants(1.0);
  const auto exact = [&](double x) {
    return 1.0 - std::exp(-std::exp(specfun::digamma(1.0) + c.a + c.b * x));
  };
  CHECK(ks_distance(e, exact) < 1.63 / std::sqrt(static_cast<double>(count)));
}

TEST_CASE("seeds give reproducible, distinct samples") {
  const EnsembleParams p(8, 3);
  const auto a = sample_spectral_radius(p, 20000, 0x10);
  const auto b = sample_spectral_radius(p, 20000, 0x10);
  const auto c = sample_spectral_radius(p, 20000, 0x11);
  CHECK(a.sorted_samples() == b.sorted_samples());
  CHECK(a.sorted_samples() != c.sorted_samples());
  const SpectralRadiusLaw law(p, MonteCarlo{1000000, 5});
  const double crit = 1.63 / std::sqrt(20000.0) + 0.002;
  CHECK(ks_distance(a, std::cref(law)) < crit);
  CHECK(ks_distance(c, std::cref(law)) < crit);
}

TEST_CASE("throughput at n = k = 32 on one core") {
  set_thread_count(1);
  const EnsembleParams p(32, 32);
  const std::size_t count = 50000;
  const auto t0 = std::chrono::steady_clock::now();
  const auto e = sample_spectral_radius(p, count, 1);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  set_thread_count(0);
  const double per_minute = static_cast<double>(count) * 60.0 / seconds;
  MESSAGE("samples per minute: " << per_minute);
  CHECK(e.count() == count);
  CHECK(per_minute >= 1e6);
}
