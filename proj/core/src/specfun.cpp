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


#include "ginibre_edge/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <math.h>

#include "ginibre_edge/errors.hpp"

namespace ginibre_edge::specfun {
namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kSqrt1_2 = 0.70710678118654752440;

// Positive root of the digamma function, split into a double and a residual.
constexpr double kDigammaRootHi = 1.4616321449683622;
constexpr double kDigammaRootLo = 9.549995429965697e-17;

// psi^(k)(root)/k!, k = 1..25.
constexpr std::array<double, 25> kDigammaRootTaylor = {
    9.67672245447621204e-01,  -4.42763168983592081e-01, 2.58499760955651026e-01,
    -1.63942705442406522e-01, 1.07824050691262371e-01,  -7.21995612564547140e-02,
    4.88042881641431101e-02,  -3.31611264748473619e-02, 2.25976482322181038e-02,
    -1.54247659049489595e-02, 1.05387916166121750e-02,  -7.20453438635686866e-03,
    4.92678139572985327e-03,  -3.36980165543932821e-03, 2.30512632673492797e-03,
    -1.57693677143019720e-03, 1.07882520191629667e-03,  -7.38070938996005150e-04,
    5.04953265834601987e-04,  -3.45468025106307692e-04, 2.36356015640270530e-04,
    -1.61706220919748030e-04, 1.10633727687474103e-04,  -7.56917958219506607e-05,
    5.17857579522208093e-05};

// Bernoulli numbers B_2, B_4, ..., B_16.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};

void require_positive(double z, const char* what) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError(std::string(what) + ": argument must be positive and finite");
  }
}

double digamma_asymptotic(double z) {
  const double w = 1.0 / (z * z);
  double series = 0.0;
  double p = w;
  for (std::size_t k = 0; k < 7; ++k) {
    series += kBernoulli[k] / (2.0 * static_cast<double>(k + 1)) * p;
    p *= w;
  }
  return std::log(z) - 0.5 / z - series;
}

double factorial(int m) {
  double f = 1.0;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

double polygamma_asymptotic(int m, double z) {
  // (-1)^(m+1) [ (m-1)!/z^m + m!/(2 z^(m+1)) + sum B_2k (2k+m-1)!/((2k)! z^(2k+m)) ]
  const double zm = std::pow(z, m);
  double s = factorial(m - 1) / zm + factorial(m) / (2.0 * zm * z);
  const double w = 1.0 / (z * z);
  double p = w / zm;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    double ratio = 1.0;  // (2k+m-1)!/(2k)!
    for (int i = 2 * static_cast<int>(k) + 1; i <= 2 * static_cast<int>(k) + m - 1; ++i) ratio *= i;
    s += kBernoulli[k - 1] * ratio * p;
    p *= w;
  }
  return (m % 2 == 1) ? s : -s;
}

double stirling_correction(double a) {
  // log Gamma(a) - [(a - 1/2) log a - a + log sqrt(2 pi)], a >= 10.
  const double w = 1.0 / (a * a);
  return (1.0 / 12.0 - w * (1.0 / 360.0 - w * (1.0 / 1260.0 - w * (1.0 / 1680.0 - w / 1188.0)))) / a;
}

// log of z^a e^{-z} / Gamma(a).
double log_gamma_prefix(double a, double z) {
  if (a < 10.0) return a * std::log(z) - z - log_gamma(a);
  const double d = (z - a) / a;
  return a * log1pmx(d) + 0.5 * std::log(a / (2.0 * kPi)) - stirling_correction(a);
}

constexpr int kMaxIterations = 10'000'000;

// Sum_{n>=0} z^n / ((a+1)...(a+n)); P(a, z) = prefix / a * series.
double lower_series(double a, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= z / (a + n);
    sum += term;
    if (term < sum * 1e-17) return sum;
  }
  throw NumericalQualityError("gamma_upper_reg: series failed to converge");
}

// Continued fraction for Q(a, z) / prefix (modified Lentz).
double upper_fraction(double a, double z) {
  constexpr double tiny = 1e-300;
  double b = z + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) return h;
  }
  throw NumericalQualityError("gamma_upper_reg: continued fraction failed to converge");
}

void check_gamma_args(double a, double z) {
  if (!(a > 0.0) || !std::isfinite(a) || !(z >= 0.0) || std::isnan(z)) {
    throw DomainError("incomplete gamma: need a > 0 and z >= 0");
  }
}

}  // namespace

double digamma(double z) {
  require_positive(z, "digamma");
  const double h = (z - kDigammaRootHi) - kDigammaRootLo;
  if (std::fabs(h) < 0.2) {
    double s = 0.0;
    for (std::size_t k = kDigammaRootTaylor.size(); k-- > 0;) s = (s + kDigammaRootTaylor[k]) * h;
    return s;
  }
  double shift = 0.0;
  while (z < 12.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  return shift + digamma_asymptotic(z);
}

double polygamma(int m, double z) {
  if (m < 1 || m > 3) throw DomainError("polygamma: order must be 1, 2 or 3");
  require_positive(z, "polygamma");
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  const double fm = factorial(m);
  double shift = 0.0;
  while (z < 15.0) {
    shift += sign * fm / std::pow(z, m + 1);
    z += 1.0;
  }
  return shift + polygamma_asymptotic(m, z);
}

double log_gamma(double z) {
  require_positive(z, "log_gamma");
  int sign = 0;
  return ::lgamma_r(z, &sign);
}

double log1pmx(double x) {
  if (!(x > -1.0)) throw DomainError("log1pmx: need x > -1");
  if (std::fabs(x) > 0.3) return std::log1p(x) - x;
  // -x^2/2 + x^3/3 - ... ; converges to double precision within ~40 terms.
  double term = x;
  double sum = 0.0;
  for (int k = 2; k < 80; ++k) {
    term *= -x;
    const double add = term / k;
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kSqrt1_2); }

double normal_sf(double x) {
  if (x < 8.0) return 0.5 * std::erfc(x * kSqrt1_2);
  if (x > 40.0) return 0.0;
  // Mills ratio by continued fraction; x^2 is split so exp sees an exact exponent.
  const double hi = x * x;
  const double lo = std::fma(x, x, -hi);
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    d = 1.0 / (x + k * d);
    c = x + k / c;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return kInvSqrt2Pi * std::exp(-0.5 * hi) * (1.0 - 0.5 * lo) / f;
}

double log_normal_sf(double x) {
  if (x < 0.0) return std::log1p(-normal_cdf(x));
  if (x < 30.0) return std::log(normal_sf(x));
  // Psi(x) = phi(x)/x * (1 - 1/x^2 + 3/x^4 - ...)
  const double w = 1.0 / (x * x);
  double term = 1.0;
  double r = 1.0;
  for (int k = 1; k < 8; ++k) {
    term *= -(2.0 * k - 1.0) * w;
    r += term;
  }
  return -0.5 * x * x - kLogSqrt2Pi - std::log(x) + std::log(r);
}

double log_normal_cdf(double x) { return log_normal_sf(-x); }

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

double gamma_upper_reg(double a, double z) {
  check_gamma_args(a, z);
  if (z == 0.0) return 1.0;
  if (std::isinf(z)) return 0.0;
  const double lp = log_gamma_prefix(a, z);
  if (z < a + 1.0) return 1.0 - std::exp(lp) / a * lower_series(a, z);
  return std::exp(lp) * upper_fraction(a, z);
}

double gamma_lower_reg(double a, double z) {
  check_gamma_args(a, z);
  if (z == 0.0) return 0.0;
  if (std::isinf(z)) return 1.0;
  const double lp = log_gamma_prefix(a, z);
  if (z < a + 1.0) return std::exp(lp) / a * lower_series(a, z);
  return 1.0 - std::exp(lp) * upper_fraction(a, z);
}

double log_gamma_upper_reg(double a, double z) {
  check_gamma_args(a, z);
  if (z == 0.0) return 0.0;
  if (std::isinf(z)) return -std::numeric_limits<double>::infinity();
  const double lp = log_gamma_prefix(a, z);
  if (z < a + 1.0) return std::log1p(-std::exp(lp) / a * lower_series(a, z));
  return lp + std::log(upper_fraction(a, z));
}

}  // namespace ginibre_edge::specfun
