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


// Reference implementations used only by the tests. Nothing here calls into
// the library under test: special functions come from Boost.Math in extended
// precision, integrals from adaptive Gauss-Kronrod, sums are brute force.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using LD = long double;
using Big = boost::multiprecision::cpp_bin_float_50;

inline constexpr LD kPi = std::numbers::pi_v<LD>;
inline constexpr LD kE = std::numbers::e_v<LD>;

inline double digamma(double x) { return static_cast<double>(boost::math::digamma(Big(x))); }

inline double polygamma(int m, double x) { return static_cast<double>(boost::math::polygamma(m, Big(x))); }

inline double gamma_q(double a, double z) {
  return static_cast<double>(boost::math::gamma_q(static_cast<LD>(a), static_cast<LD>(z)));
}

inline LD psi_tail(LD v) { return 0.5L * boost::math::erfc(v / std::numbers::sqrt2_v<LD>); }
inline double normal_sf(double x) { return static_cast<double>(psi_tail(x)); }
inline double normal_cdf(double x) { return static_cast<double>(psi_tail(-static_cast<LD>(x))); }
inline double normal_pdf(double x) {
  return static_cast<double>(std::exp(-0.5L * x * x) / std::sqrt(2.0L * kPi));
}
inline double gumbel_cdf(double x) { return static_cast<double>(std::exp(-std::exp(-static_cast<LD>(x)))); }

// Centering and scaling constants, transcribed from their definitions.
struct Constants {
  LD a, b, a_tilde, b_tilde;
};

inline Constants constants(LD alpha) {
  const LD log_e_alpha = std::log(alpha + kE);
  const LD ell2 = std::log(std::sqrt(2.0L * kPi) * std::log(alpha + std::exp(1.0L / std::sqrt(2.0L * kPi))));
  Constants c{};
  c.a = std::sqrt(std::log(alpha + 1.0L)) - ell2 / std::sqrt(log_e_alpha);
  c.b = 1.0L / std::sqrt(log_e_alpha);
  const LD log_e2_alpha = std::log(alpha + kE * kE);
  const LD inner = std::log(std::pow(2.0L, -0.75L) * kPi) +
                   1.25L * std::log(std::log(alpha + std::exp(std::pow(2.0L, 0.6L) * std::pow(kPi, -0.8L))));
  c.a_tilde = std::sqrt(std::log(alpha + 1.0L) / 2.0L) - std::sqrt(2.0L) * inner / std::sqrt(log_e2_alpha);
  c.b_tilde = std::sqrt(2.0L) / std::sqrt(log_e2_alpha);
  return c;
}

// Product over j of Phi(v_alpha(j, x)), summed in logs until the factors are 1 to 1e-40.
inline double phi_alpha(double alpha, double x) {
  const Constants c = constants(alpha);
  const LD step = 1.0L / std::sqrt(static_cast<LD>(alpha));
  LD sum = 0.0L;
  for (std::int64_t j = 1;; ++j) {
    const LD v = static_cast<LD>(j - 1) * step + c.a + c.b * x;
    const LD tail = psi_tail(v);
    sum += std::log1p(-tail);
    if (v > 13.5L) break;
  }
  return static_cast<double>(std::exp(sum));
}

inline LD integrate(const std::function<LD(LD)>& f, LD a, LD b, LD tol = 1e-13L) {
  return boost::math::quadrature::gauss_kronrod<LD, 61>::integrate(f, a, b, 15, tol);
}

// P(log S1 + log S2 >= t) for independent Gamma(j, 1) variables.
inline double product_tail_k2(int j, double t) {
  const LD lg = std::lgamma(static_cast<LD>(j));
  const auto f = [&](LD u) -> LD {
    const LD s = std::exp(u);
    const LD log_density = (j - 1) * u - s - lg + u;
    if (log_density < -11000.0L) return 0.0L;
    const LD z = std::exp(static_cast<LD>(t) - u);
    return std::exp(log_density) * boost::math::gamma_q(static_cast<LD>(j), z);
  };
  return static_cast<double>(integrate(f, -60.0L, 60.0L));
}

struct MonteCarloTail {
  double probability;
  double standard_error;
};

// Independent sampler: std::mt19937_64 and std::gamma_distribution.
inline MonteCarloTail product_tail_mc(int j, int k, double t, std::int64_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::gamma_distribution<double> g(static_cast<double>(j), 1.0);
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    double s = 0.0;
    for (int r = 0; r < k; ++r) s += std::log(g(gen));
    if (s >= t) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(count);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(count))};
}

// Entry (j, k) of the limiting operator, straight from its integral form.
inline double limit_entry(std::int64_t j, std::int64_t k, double x, double alpha) {
  if ((j - k) % 2 != 0) return 0.0;
  const Constants c = constants(alpha);
  const LD sa = std::sqrt(static_cast<LD>(alpha));
  const LD half_sum = static_cast<LD>(j + k) / 2.0L;
  const LD v = (half_sum - 1.0L) / sa + c.a_tilde + c.b_tilde * x;
  const LD q = static_cast<LD>(j - k);
  const auto f = [&](LD theta) -> LD {
    const LD cs = std::cos(theta);
    if (cs <= 0.0L) return 0.0L;
    return std::cos(q * theta) * psi_tail(v - sa * std::log(cs * cs));
  };
  LD integral = 0.0L;
  const int pieces = 64;
  for (int i = 0; i < pieces; ++i) {
    integral += integrate(f, kPi / 2.0L * i / pieces, kPi / 2.0L * (i + 1) / pieces);
  }
  return static_cast<double>(2.0L / kPi * std::exp(-q * q / (4.0L * alpha)) * integral);
}

// Determinant by Gaussian elimination with partial pivoting in long double.
inline LD determinant(std::vector<std::vector<LD>> m) {
  const std::size_t n = m.size();
  LD det = 1.0L;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
    }
    if (m[p][c] == 0.0L) return 0.0L;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const LD f = m[r][c] / m[c][c];
      for (std::size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  return det;
}

// det(I - M) for the N x N truncation of the limiting operator.
inline double fredholm_det(double x, double alpha, std::int64_t n) {
  std::vector<std::vector<LD>> m(static_cast<std::size_t>(n), std::vector<LD>(static_cast<std::size_t>(n)));
  for (std::int64_t j = 1; j <= n; ++j) {
    for (std::int64_t k = j; k <= n; ++k) {
      const LD e = limit_entry(j, k, x, alpha);
      m[j - 1][k - 1] = (j == k ? 1.0L : 0.0L) - e;
      m[k - 1][j - 1] = m[j - 1][k - 1];
    }
  }
  return static_cast<double>(determinant(std::move(m)));
}

// Finite-n entry with exact k = 1 tails, from its integral form.
inline double finite_entry_k1(std::int64_t j, std::int64_t k, double x, std::int64_t n) {
  if ((j - k) % 2 != 0) return 0.0;
  const LD alpha = static_cast<LD>(n);
  const Constants c = constants(alpha);
  const LD threshold = boost::math::digamma(static_cast<LD>(n)) + (c.a_tilde + c.b_tilde * x) / std::sqrt(alpha);
  const std::int64_t p = (j + k) / 2;
  const LD shape = static_cast<LD>(n + 1 - p);
  const LD q = static_cast<LD>(j - k);
  const auto f = [&](LD theta) -> LD {
    const LD cs = std::cos(theta);
    if (cs <= 0.0L) return 0.0L;
    const LD t = threshold - std::log(cs * cs);
    if (t > 30.0L) return 0.0L;
    return std::cos(q * theta) * boost::math::gamma_q(shape, std::exp(t));
  };
  LD integral = 0.0L;
  const int pieces = 64;
  for (int i = 0; i < pieces; ++i) {
    integral += integrate(f, kPi / 2.0L * i / pieces, kPi / 2.0L * (i + 1) / pieces);
  }
  const LD log_pref = std::lgamma(static_cast<LD>(n - p + 1)) -
                      0.5L * (std::lgamma(static_cast<LD>(n - j + 1)) + std::lgamma(static_cast<LD>(n - k + 1)));
  return static_cast<double>(2.0L / kPi * std::exp(log_pref) * integral);
}

// max |F - G| on a uniform grid.
inline double dense_sup(const std::function<double(double)>& f, const std::function<double(double)>& g, double lo,
                        double hi, double step, double* argmax = nullptr) {
  double best = 0.0;
  const auto count = static_cast<std::int64_t>(std::ceil((hi - lo) / step));
  for (std::int64_t i = 0; i <= count; ++i) {
    const double x = lo + step * static_cast<double>(i);
    const double d = std::fabs(f(x) - g(x));
    if (d > best) {
      best = d;
      if (argmax) *argmax = x;
    }
  }
  return best;
}

}  // namespace oracle
