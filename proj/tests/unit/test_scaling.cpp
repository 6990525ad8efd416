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

#include <cfloat>
#include <cmath>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/scaling.hpp"
#include "ginibre_edge/specfun.hpp"
#include "oracles/oracles.hpp"

using namespace ginibre_edge;

TEST_CASE("constants against a long double transcription") {
  for (double alpha : {1e-8, 1e-3, 0.25, 1.0, 3.0, 50.0, 1e4, 1e9, 1e14}) {
    const auto c = limit_constants(alpha);
    const auto o = oracle::constants(alpha);
    CAPTURE(alpha);
    CHECK(c.a == doctest::Approx(static_cast<double>(o.a)).epsilon(1e-13));
    CHECK(c.b == doctest::Approx(static_cast<double>(o.b)).epsilon(1e-14));
    CHECK(c.a_tilde == doctest::Approx(static_cast<double>(o.a_tilde)).epsilon(1e-13));
    CHECK(c.b_tilde == doctest::Approx(static_cast<double>(o.b_tilde)).epsilon(1e-14));
  }
  CHECK(scale_b(1e-14) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(scale_b_tilde(1e-14) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(limit_constants(0.0), DomainError);
  CHECK_THROWS_AS(scale_a(-1.0), DomainError);
  CHECK_THROWS_AS(EnsembleParams(0, 3), DomainError);
}

TEST_CASE("finite constants use n/k") {
  const EnsembleParams p(300, 7);
  CHECK(p.alpha_n() == 300.0 / 7.0);
  const auto s = finite_scaling(p);
  CHECK(s.a_n == scale_a(300.0 / 7.0));
  CHECK(s.b_tilde_n == scale_b_tilde(300.0 / 7.0));
}

TEST_CASE("v, v-tilde and u are affine in j") {
  const double alpha = 2.5;
  const auto c = limit_constants(alpha);
  for (double x : {-2.0, 0.0, 1.7}) {
    CHECK(v_alpha(1, x, c) == doctest::Approx(c.a + c.b * x).epsilon(1e-15));
    CHECK(v_alpha(7, x, c) - v_alpha(6, x, c) == doctest::Approx(1.0 / std::sqrt(alpha)).epsilon(1e-13));
    CHECK(v_alpha(9, x, c) - v_alpha(1, x, c) == doctest::Approx(8.0 / std::sqrt(alpha)).epsilon(1e-13));
    CHECK(v_tilde_alpha(4, x, alpha) == doctest::Approx(3.0 / std::sqrt(alpha) + c.a_tilde + c.b_tilde * x));
  }
  CHECK(v_alpha(3, 0.0, 1.0) == doctest::Approx(2.0 + scale_a(1.0)).epsilon(1e-15));
  const EnsembleParams p(40, 16);
  CHECK(u_n(5, 0.3, p) == doctest::Approx(v_alpha(5, 0.3, 2.5)).epsilon(1e-15));
}

TEST_CASE("q1 and q2 at special points") {
  for (double alpha : {0.25, 1.0, 4.0}) {
    const auto c = limit_constants(alpha);
    CHECK(q2(1, 0.0, c) == doctest::Approx(c.c1).epsilon(1e-15));
    for (int j : {1, 2, 5}) {
      const double x0 = -(static_cast<double>(j - 1) / std::sqrt(alpha) + c.a) / c.b;
      const double want = (-2.0 * alpha + 6.0 * j * (j - 1)) / (12.0 * std::sqrt(alpha));
      CHECK(q1(j, x0, c) == doctest::Approx(want).epsilon(1e-12));
    }
  }
  const auto c = limit_constants(1.0);
  const double x1 = (1.0 - c.a) / c.b;
  CHECK(q1(1, x1, c) == doctest::Approx(-0.25).epsilon(1e-13));
  CHECK(q2(3, 0.5, c) == doctest::Approx(c.c1 - 0.5 * c.c2 - 1.0).epsilon(1e-14));
}

TEST_CASE("small alpha behaviour of a and b") {
  double prev_a = 0.0;
  for (double alpha : {1e-2, 1e-4, 1e-6}) {
    const double ra = std::fabs(scale_a(alpha) - std::sqrt(alpha)) / alpha;
    const double rb = std::fabs(scale_b(alpha) - 1.0) / alpha;
    CHECK(ra < 2.0);
    CHECK(rb < 1.0);
    if (prev_a > 0.0) CHECK(std::fabs(ra - prev_a) < 0.5);
    prev_a = ra;
  }
}

TEST_CASE("c1 and c2 are the derivatives of a and -b") {
  for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
    const double h = 1e-4 * alpha;
    const double da = (scale_a(alpha + h) - scale_a(alpha - h)) / (2.0 * h);
    const double db = (scale_b(alpha + h) - scale_b(alpha - h)) / (2.0 * h);
    const auto c = limit_constants(alpha);
    CAPTURE(alpha);
    CHECK(std::fabs(c.c1 - da) <= 1e-6 * std::fabs(da));
    CHECK(std::fabs(c.c2 + db) <= 1e-6 * std::fabs(db));
  }
}

TEST_CASE("a-tilde bracket identity") {
  const double pi = specfun::kPi;
  for (double alpha = 0.01; alpha < 1e6; alpha *= 3.7) {
    const double lhs = (scale_a_tilde(alpha) - std::sqrt(std::log1p(alpha) / 2.0)) *
                       (-std::sqrt(std::log(alpha + std::exp(2.0))) / std::sqrt(2.0));
    const double rhs = std::log(std::pow(2.0, -0.75) * pi) +
                       1.25 * std::log(std::log(alpha + std::exp(std::pow(2.0, 0.6) * std::pow(pi, -0.8))));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  CHECK(ell2_infinity(3.0) ==
        doctest::Approx(std::log(std::sqrt(2.0 * pi) * std::log(3.0 + std::exp(1.0 / std::sqrt(2.0 * pi))))));
}

TEST_CASE("rescaling maps invert their thresholds") {
  for (auto [n, k] : {std::pair<int, int>{1, 1}, {10, 3}, {200, 2000000}, {10000, 1}}) {
    const EnsembleParams p(n, k);
    const auto s = finite_scaling(p);
    const double centre = 0.5 * k * specfun::digamma(n);
    // Rounding the threshold near `centre` costs this much in x.
    const double slack = 1e-12 + 8.0 * DBL_EPSILON * std::fabs(centre) * 2.0 * std::sqrt(s.alpha_n) *
                                     std::max(1.0 / s.b_n, 1.0 / s.b_tilde_n);
    for (double x : {-3.0, 0.0, 2.2}) {
      CHECK(std::fabs(rescale_spectral(p, spectral_threshold(p, x)) - x) <= slack);
      CHECK(std::fabs(rescale_rightmost(p, rightmost_threshold(p, x)) - x) <= slack);
    }
    CHECK(spectral_threshold(p, -s.a_n / s.b_n) == doctest::Approx(centre).epsilon(1e-14));
  }
  const EnsembleParams one(1, 1);
  const auto c = limit_constants(1.0);
  CHECK(spectral_threshold(one, 0.8) ==
        doctest::Approx(0.5 * specfun::digamma(1.0) + (c.a + c.b * 0.8) / 2.0).epsilon(1e-15));
}
