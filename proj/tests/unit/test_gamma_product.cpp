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

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <random>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/gamma_product.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/rng.hpp"
#include "ginibre_edge/specfun.hpp"
#include "oracles/oracles.hpp"

using namespace ginibre_edge;

TEST_CASE("cumulants are polygamma values") {
  for (int j : {1, 2, 9, 300}) {
    for (int k : {1, 4, 1000}) {
      const GammaProductDist d(j, k);
      CHECK(d.mean() == doctest::Approx(k * oracle::digamma(j)).epsilon(1e-13));
      CHECK(d.variance() == doctest::Approx(k * oracle::polygamma(1, j)).epsilon(1e-13));
      CHECK(d.third_cumulant() == doctest::Approx(k * oracle::polygamma(2, j)).epsilon(1e-13));
      CHECK(d.fourth_cumulant() == doctest::Approx(k * oracle::polygamma(3, j)).epsilon(1e-13));
      const double s3 = std::pow(d.variance(), 1.5);
      CHECK(d.lambda3() == doctest::Approx(d.third_cumulant() / s3).epsilon(1e-13));
      for (double lam : {-0.5 * j, 0.3, 2.0}) {
        const double want = k * (std::lgamma(j + lam) - std::lgamma(static_cast<double>(j)));
        CHECK(d.mgf_exponent(lam) == doctest::Approx(want).epsilon(1e-12));
      }
    }
  }
  CHECK_THROWS_AS(GammaProductDist(0, 1), DomainError);
  CHECK_THROWS_AS(GammaProductDist(1, 0), DomainError);
}

TEST_CASE("exact tails for k = 1") {
  const GammaProductDist one(1, 1);
  for (double t : {-3.0, -0.5, 0.0, 1.0, 2.5}) {
    CHECK(tail(one, t, ExactK1{}).probability == doctest::Approx(std::exp(-std::exp(t))).epsilon(1e-14));
  }
  CHECK(tail(GammaProductDist(2, 1), 0.0, ExactK1{}).probability ==
        doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(tail(GammaProductDist(2, 3), 0.0, ExactK1{}), DomainError);
  CHECK_THROWS_AS(tail(one, std::nan(""), ExactK1{}), DomainError);
}

TEST_CASE("product of two exponentials") {
  // P(S1 S2 >= 1) = int e^{-s} e^{-1/s} ds = 2 K_1(2).
  const double bessel = 2.0 * boost::math::cyl_bessel_k(1, 2.0);
  CHECK(oracle::product_tail_k2(1, 0.0) == doctest::Approx(bessel).epsilon(1e-12));
  CHECK(bessel == doctest::Approx(0.2797318).epsilon(1e-6));
  const GammaProductDist d(1, 2);
  const auto mc = tail(d, 0.0, MonteCarlo{400000, 17});
  CHECK(mc.standard_error > 0.0);
  CHECK(std::fabs(mc.probability - bessel) < 4.0 * mc.standard_error);
  for (int j : {2, 6}) {
    const GammaProductDist dj(j, 2);
    for (double z : {-1.5, 0.0, 2.0}) {
      const double t = dj.mean() + z * dj.stddev();
      const auto est = tail(dj, t, MonteCarlo{400000, 3});
      CHECK(std::fabs(est.probability - oracle::product_tail_k2(j, t)) < 4.0 * est.standard_error + 1e-12);
    }
  }
}

TEST_CASE("Edgeworth series") {
  const GammaProductDist d(7, 40);
  const double phi0 = 1.0 / std::sqrt(2.0 * M_PI);
  CHECK(edgeworth_cdf(d, 0.0) == doctest::Approx(0.5 + d.lambda3() / 6.0 * phi0).epsilon(1e-15));
  CHECK(edgeworth_cdf(d, 1.3) + edgeworth_sf(d, 1.3) == doctest::Approx(1.0).epsilon(1e-15));
  const GammaProductDist huge(50, 100000000);
  for (double x : {-2.0, 0.0, 1.0, 3.0}) {
    CHECK(std::fabs(edgeworth_cdf(huge, x) - oracle::normal_cdf(x)) < 1e-4);
  }
  const double x = 1.3;
  const double l3 = d.lambda3();
  const double l4 = d.fourth_cumulant() / (d.variance() * d.variance());
  const double corr = -l3 * (x * x - 1) / 6 - l4 * (x * x * x - 3 * x) / 24 -
                      l3 * l3 * (std::pow(x, 5) - 10 * std::pow(x, 3) + 15 * x) / 72;
  CHECK(edgeworth_cdf(d, x) == doctest::Approx(oracle::normal_cdf(x) + oracle::normal_pdf(x) * corr).epsilon(1e-13));
}

TEST_CASE("Edgeworth against an independent sampler at j = k = 500") {
  const GammaProductDist d(500, 500);
  const double t = d.mean() + d.stddev();
  const auto mc = oracle::product_tail_mc(500, 500, t, 100000, 99);
  const double cdf = edgeworth_cdf(d, 1.0);
  CHECK(std::fabs((1.0 - cdf) - mc.probability) < 3.0 * mc.standard_error);
}

TEST_CASE("Chernoff bound") {
  std::mt19937_64 gen(21);
  std::uniform_int_distribution<int> pick_j(1, 200);
  std::uniform_real_distribution<double> pick_z(0.05, 8.0);
  for (int i = 0; i < 100; ++i) {
    const GammaProductDist d(pick_j(gen), 1);
    const double t = d.mean() + pick_z(gen) * d.stddev();
    const auto c = chernoff_bound(d, t);
    CHECK(c.bound >= tail(d, t, ExactK1{}).probability);
    CHECK(c.bound <= 1.0);
    CHECK(c.exponent_s > 0.0);
  }
  const GammaProductDist ten(10, 1);
  const double t = specfun::digamma(10.0) + 3.0 * std::sqrt(specfun::polygamma(1, 10.0));
  const double ratio = chernoff_bound(ten, t).bound / tail(ten, t, ExactK1{}).probability;
  CHECK(ratio > 1.0);
  CHECK(ratio <= 50.0);
  for (int k : {1, 5, 300}) {
    const GammaProductDist d(4, k);
    const double tt = d.mean() + 2.5 * d.stddev();
    const auto c = chernoff_bound(d, tt);
    CHECK(std::fabs(k * oracle::digamma(4.0 + c.exponent_s) - tt) < 1e-10 * std::max(1.0, std::fabs(tt)));
    CHECK(c.log_bound == doctest::Approx(d.mgf_exponent(c.exponent_s) - c.exponent_s * tt).epsilon(1e-12));
    CHECK_THROWS_AS(chernoff_bound(d, d.mean()), DomainError);
    CHECK_THROWS_AS(tail(d, d.mean() - 1.0, Chernoff{}), DomainError);
  }
}

TEST_CASE("k = 1 consistency of all evaluators") {
  for (int j : {1, 3, 20, 150}) {
    const GammaProductDist d(j, 1);
    for (double z = -3.0; z <= 3.0; z += 0.5) {
      const double t = d.mean() + z * d.stddev();
      const double exact = tail(d, t, ExactK1{}).probability;
      CHECK(std::fabs(tail(d, t, Edgeworth{}).probability - exact) <= 0.5 / std::sqrt(j));
      if (z > 0.0) CHECK(tail(d, t, Chernoff{}).probability >= exact);
      const auto mc = tail(d, t, MonteCarlo{100000, 5});
      const double se = std::sqrt(exact * (1.0 - exact) / 100000.0);
      CHECK(std::fabs(mc.probability - exact) <= 4.0 * std::max(se, mc.standard_error) + 1e-12);
    }
  }
}

TEST_CASE("tails are nonincreasing in t") {
  const std::vector<TailMethod> methods{Edgeworth{}, MonteCarlo{50000, 1}};
  for (int k : {1, 3, 60}) {
    const GammaProductDist d(5, k);
    std::vector<TailMethod> all = methods;
    if (k == 1) all.push_back(ExactK1{});
    for (const auto& m : all) {
      double prev = 1.0;
      for (double z = -4.0; z <= 4.0; z += 0.1) {
        const double p = tail(d, d.mean() + z * d.stddev(), m).probability;
        CHECK(p <= prev + 1e-15);
        prev = p;
      }
    }
    double prev = 1.0;
    for (double z = 0.1; z <= 6.0; z += 0.1) {
      const double p = tail(d, d.mean() + z * d.stddev(), Chernoff{}).probability;
      CHECK(p <= prev + 1e-15);
      prev = p;
    }
  }
}

TEST_CASE("sampled moments") {
  const GammaProductDist d(3, 4);
  const std::size_t n = 1000000;
  const auto s = sample_batch(d, n, 12);
  double m = 0.0;
  for (double v : s) m += v;
  m /= static_cast<double>(n);
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  for (double v : s) {
    const double e = v - m;
    c2 += e * e;
    c3 += e * e * e;
    c4 += e * e * e * e;
  }
  c2 /= static_cast<double>(n);
  c3 /= static_cast<double>(n);
  c4 /= static_cast<double>(n);
  CHECK(std::fabs(m - d.mean()) <= 4.0 * std::sqrt(d.variance() / n));
  const double var_se = std::sqrt((c4 - c2 * c2) / n);
  CHECK(std::fabs(c2 - d.variance()) <= 5.0 * var_se);
  const double skew = c3 / std::pow(c2, 1.5);
  // Standard error of the skewness from 100 batch estimates.
  const std::size_t batches = 100;
  const std::size_t per = n / batches;
  double bs = 0.0;
  double bs2 = 0.0;
  for (std::size_t b = 0; b < batches; ++b) {
    double bm = 0.0;
    for (std::size_t i = b * per; i < (b + 1) * per; ++i) bm += s[i];
    bm /= static_cast<double>(per);
    double b2 = 0.0;
    double b3 = 0.0;
    for (std::size_t i = b * per; i < (b + 1) * per; ++i) {
      const double e = s[i] - bm;
      b2 += e * e;
      b3 += e * e * e;
    }
    const double sk = (b3 / per) / std::pow(b2 / per, 1.5);
    bs += sk;
    bs2 += sk * sk;
  }
  const double spread = std::sqrt((bs2 - bs * bs / batches) / (batches - 1));
  CHECK(std::fabs(skew - d.lambda3()) <= 5.0 * spread / std::sqrt(static_cast<double>(batches)));
}

TEST_CASE("sampling is deterministic and schedule independent") {
  const GammaProductDist d(6, 3);
  set_thread_count(1);
  const auto a = sample_batch(d, 5000, 77);
  set_thread_count(4);
  const auto b = sample_batch(d, 5000, 77);
  set_thread_count(0);
  CHECK(a == b);
  const auto c = sample_batch(d, 5000, 78);
  CHECK(a != c);
  Philox4x32 r1(1, 1);
  Philox4x32 r2(1, 1);
  CHECK(sample_log(d, r1) == sample_log(d, r2));
  Philox4x32 r3(4, 0);
  double s = 0.0;
  for (int i = 0; i < 200000; ++i) s += std::exp(sample_log_gamma(0.4, r3));
  CHECK(std::fabs(s / 200000 - 0.4) < 4.0 * std::sqrt(0.4 / 200000));
}

TEST_CASE("default tail methods") {
  CHECK(std::holds_alternative<ExactK1>(default_tail_method(1)));
  CHECK(std::holds_alternative<MonteCarlo>(default_tail_method(2)));
  CHECK(std::holds_alternative<MonteCarlo>(default_tail_method(29)));
  CHECK(std::get<MonteCarlo>(default_tail_method(29)).samples == 1000000);
  CHECK(std::holds_alternative<Edgeworth>(default_tail_method(30)));
  CHECK(method_name(Chernoff{}) == "chernoff");
}
