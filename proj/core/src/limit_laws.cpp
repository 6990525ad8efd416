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


#include "ginibre_edge/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/quadrature.hpp"
#include "ginibre_edge/specfun.hpp"

namespace ginibre_edge {

namespace sf = specfun;

namespace {

constexpr std::int64_t kDirectLimit = 20000;
constexpr std::int64_t kHeadTerms = 64;

// Bound on sum_{i>=0} Psi(v + i h) for v > 0.
double ladder_tail_bound(double v, double h) {
  if (v <= 0.0) return std::numeric_limits<double>::infinity();
  return sf::normal_sf(v) + sf::normal_pdf(v) / (v * v * h);
}

// Smallest J >= 0 with ladder_tail_bound(v1 + J h) < eps.
std::int64_t ladder_terms(double v1, double h, double eps) {
  auto ok = [&](std::int64_t j) { return ladder_tail_bound(v1 + static_cast<double>(j) * h, h) < eps; };
  if (ok(0)) return 0;
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  if (v1 < 0.0) hi = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(-v1 / h)));
  while (!ok(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > (std::int64_t{1} << 60)) throw NumericalQualityError("phi_alpha: truncation search diverged");
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

double mills_inverse(double u) { return std::exp(-0.5 * u * u - 0.91893853320467274178 - sf::log_normal_cdf(u)); }

struct Ladder {
  double v1;
  double h;
};

Ladder ladder(const PhiAlphaLaw& law, double x) {
  if (!(law.alpha > 0.0) || !std::isfinite(law.alpha)) throw DomainError("phi_alpha: alpha must be positive");
  if (!(law.tail_eps > 0.0)) throw DomainError("phi_alpha: tail_eps must be positive");
  return {scale_a(law.alpha) + scale_b(law.alpha) * x, 1.0 / std::sqrt(law.alpha)};
}

double direct_sum(double v1, double h, std::int64_t terms) {
  double s = 0.0;
  for (std::int64_t j = 0; j < terms; ++j) s += sf::log_normal_cdf(v1 + static_cast<double>(j) * h);
  return s;
}

}  // namespace

std::int64_t phi_alpha_terms(const PhiAlphaLaw& law, double x) {
  if (std::isinf(x)) return 0;
  const auto l = ladder(law, x);
  return std::max<std::int64_t>(1, ladder_terms(l.v1, l.h, law.tail_eps));
}

double log_phi_alpha_partial(const PhiAlphaLaw& law, double x, std::int64_t terms) {
  const auto l = ladder(law, x);
  return direct_sum(l.v1, l.h, terms);
}

double log_phi_alpha(const PhiAlphaLaw& law, double x) {
  if (std::isnan(x)) throw DomainError("phi_alpha: x is NaN");
  if (x == -std::numeric_limits<double>::infinity()) return -std::numeric_limits<double>::infinity();
  if (x == std::numeric_limits<double>::infinity()) return 0.0;
  const auto l = ladder(law, x);
  const std::int64_t terms = std::max<std::int64_t>(1, ladder_terms(l.v1, l.h, law.tail_eps));
  if (terms <= kDirectLimit) return direct_sum(l.v1, l.h, terms);

  // Euler-Maclaurin for the long run of factors that differ from 1 only slightly.
  double s = direct_sum(l.v1, l.h, kHeadTerms);
  const double w = l.v1 + static_cast<double>(kHeadTerms) * l.h;
  const double upper = l.v1 + static_cast<double>(terms) * l.h;
  const int panels = std::max(1, static_cast<int>(std::ceil((upper - w) / 0.25)));
  const double integral =
      quadrature::integrate_composite([](double u) { return sf::log_normal_cdf(u); }, w, upper, panels, 16);
  const double r = mills_inverse(w);
  const double f3 = r * ((w + r) * (w + 2.0 * r) - 1.0);
  s += integral / l.h + 0.5 * sf::log_normal_cdf(w) - l.h * r / 12.0 + l.h * l.h * l.h * f3 / 720.0;
  return s;
}

double phi_alpha(const PhiAlphaLaw& law, double x) { return std::exp(log_phi_alpha(law, x)); }

DistanceReport with_prediction(DistanceReport report, double predicted) {
  report.predicted = predicted;
  report.ratio = predicted > 0.0 ? report.sup_distance / predicted : std::numeric_limits<double>::quiet_NaN();
  return report;
}

namespace {

void check_grid(std::span<const double> grid) {
  if (grid.size() < 8) throw DomainError("distance grid needs at least 8 points");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("distance grid must be strictly increasing");
  }
}

template <class F>
std::pair<double, double> grid_sup(F&& f, std::span<const double> grid) {
  const auto n = static_cast<std::int64_t>(grid.size());
  std::vector<double> values(grid.size());
  ExceptionGuard guard;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    guard.run([&] { values[static_cast<std::size_t>(i)] = f(grid[static_cast<std::size_t>(i)]); });
  }
  guard.rethrow();
  const auto it = std::max_element(values.begin(), values.end());
  const std::size_t i = static_cast<std::size_t>(it - values.begin());
  double best_x = grid[i];
  double best = *it;
  const double lo = grid[i == 0 ? 0 : i - 1];
  const double hi = grid[std::min(i + 1, grid.size() - 1)];
  const auto [x, v] = quadrature::golden_maximize(f, lo, hi, 1e-10 * std::max(1.0, std::fabs(best_x)));
  if (v > best) {
    best = v;
    best_x = x;
  }
  return {best, best_x};
}

}  // namespace

double w1_distance(const Cdf& f, const Cdf& g, std::span<const double> grid) {
  check_grid(grid);
  return quadrature::adaptive_simpson([&](double x) { return std::fabs(f(x) - g(x)); }, grid.front(),
                                      grid.back(), 1e-8);
}

DistanceReport sup_distance(const Cdf& f, const Cdf& g, std::span<const double> grid) {
  check_grid(grid);
  DistanceReport r;
  const auto [s, x] = grid_sup([&](double t) { return std::fabs(f(t) - g(t)); }, grid);
  r.sup_distance = s;
  r.argmax_x = x;
  r.w1_distance = w1_distance(f, g, grid);
  r.ratio = std::numeric_limits<double>::quiet_NaN();
  return r;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  if (count < 2 || !(hi > lo)) throw DomainError("linear_grid: need count >= 2 and hi > lo");
  std::vector<double> g(count);
  const double h = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) g[i] = lo + h * static_cast<double>(i);
  g.back() = hi;
  return g;
}

std::vector<double> default_grid(double alpha) { return linear_grid(-10.0, ell2_infinity(alpha) + 10.0, 4001); }

double rate_predictor_gumbel(double alpha_n) {
  if (!(alpha_n > 1.0)) throw DomainError("Gumbel-regime predictor needs alpha_n > 1");
  const double l = std::log(alpha_n);
  const double ll = std::log(l);
  return ll * ll / (2.0 * sf::kE * l);
}

double w1_predictor_gumbel(double alpha_n) { return sf::kE * rate_predictor_gumbel(alpha_n); }

double sup_linear_times_pdf(double d1, double d2) {
  d1 = std::fabs(d1);
  d2 = std::fabs(d2);
  if (d2 == 0.0) return d1 * sf::kInvSqrt2Pi;
  const double r = std::sqrt(d1 * d1 + 4.0 * d2 * d2);
  const double s = d1 + r;
  return s / (2.0 * sf::kSqrt2Pi) * std::exp(-2.0 * d2 * d2 / (s * s));
}

double rate_predictor_gaussian(const EnsembleParams& params) {
  return sup_linear_times_pdf(std::sqrt(params.alpha_n()), 0.25 / static_cast<double>(params.n()));
}

double w1_predictor_gaussian(const EnsembleParams& params) {
  const double n = static_cast<double>(params.n());
  const double d1 = std::sqrt(params.alpha_n());
  const double c = 4.0 * n * d1;
  return d1 * (sf::normal_cdf(c) - sf::normal_sf(c)) + sf::normal_pdf(c) / (2.0 * n);
}

double fixed_alpha_correction(const EnsembleParams& params, double alpha, double x) {
  const auto c = limit_constants(alpha);
  const PhiAlphaLaw law{alpha, 1e-16};
  const std::int64_t terms = phi_alpha_terms(law, x) + 2;
  const double inv_n = 1.0 / static_cast<double>(params.n());
  const double da = params.alpha_n() - alpha;
  double s = 0.0;
  double log_phi = 0.0;
  for (std::int64_t j = 1; j <= terms; ++j) {
    const double v = v_alpha(static_cast<double>(j), x, c);
    log_phi += sf::log_normal_cdf(v);
    s += mills_inverse(v) * (q1(j, x, c) * inv_n + da * q2(j, x, c));
  }
  return std::exp(log_phi) * std::fabs(s);
}

FixedAlphaPrediction rate_predictor_fixed_alpha(const EnsembleParams& params, double alpha,
                                                std::span<const double> grid) {
  check_grid(grid);
  auto g = [&](double x) { return fixed_alpha_correction(params, alpha, x); };
  const auto [s, x] = grid_sup(g, grid);
  FixedAlphaPrediction p;
  p.sup = s;
  p.argmax_x = x;
  p.w1 = quadrature::adaptive_simpson(g, grid.front(), grid.back(), 1e-10);
  return p;
}

double rate_predictor_fixed_alpha(const EnsembleParams& params, double alpha) {
  const auto grid = default_grid(alpha);
  return rate_predictor_fixed_alpha(params, alpha, grid).sup;
}

BetaClassification classify_beta(const EnsembleParams& params) {
  const double n = static_cast<double>(params.n());
  BetaClassification c;
  c.beta = n * n * params.alpha_n();
  if (c.beta < 1e-6) {
    c.regime = BetaRegime::zero;
    c.supremum = 1.0 / (4.0 * std::sqrt(2.0 * sf::kPi * sf::kE) * n);
  } else if (c.beta > 1e6) {
    c.regime = BetaRegime::infinite;
    c.supremum = std::sqrt(params.alpha_n()) * sf::kInvSqrt2Pi;
  } else {
    c.regime = BetaRegime::finite;
    const double sb = std::sqrt(c.beta);
    const double s = 2.0 * sb + std::sqrt(4.0 * c.beta + 1.0);
    c.supremum = s / (4.0 * std::sqrt(2.0 * sf::kPi) * n) * std::exp(-0.5 / (s * s));
  }
  return c;
}

double gumbel_pointwise_predictor(double alpha, double x) {
  const double d = x - ell2_infinity(alpha);
  return std::exp(-x - std::exp(-x)) * std::fabs(d * d + 4.0 * d) / (2.0 * std::log(alpha + sf::kE));
}

double correction_bound_q1(double alpha) { return 4.0 / 3.0 * (alpha + std::sqrt(alpha) + 1.0); }

double correction_bound_q2(double alpha) {
  const auto c = limit_constants(alpha);
  return 2.0 / (sf::kE * std::log(2.0)) * (c.c1 + c.c2 * (alpha - 1.0) / c.b + 1.0 / alpha) *
         (1.0 + std::sqrt(alpha));
}

CorrectionBoundReport correction_bound_check(double alpha, std::span<const double> grid) {
  check_grid(grid);
  const auto c = limit_constants(alpha);
  const PhiAlphaLaw law{alpha, 1e-16};
  const auto n = static_cast<std::int64_t>(grid.size());
  std::vector<double> m1(grid.size());
  std::vector<double> m2(grid.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    const double x = grid[static_cast<std::size_t>(i)];
    const std::int64_t terms = phi_alpha_terms(law, x) + 2;
    double lp = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::int64_t j = 1; j <= terms; ++j) {
      const double v = v_alpha(static_cast<double>(j), x, c);
      lp += sf::log_normal_cdf(v);
      const double r = mills_inverse(v);
      s1 += r * q1(j, x, c);
      s2 += r * q2(j, x, c);
    }
    m1[static_cast<std::size_t>(i)] = std::exp(lp) * std::fabs(s1);
    m2[static_cast<std::size_t>(i)] = std::exp(lp) * std::fabs(s2);
  }
  CorrectionBoundReport r;
  r.sup_q1 = *std::max_element(m1.begin(), m1.end());
  r.sup_q2 = *std::max_element(m2.begin(), m2.end());
  r.bound_q1 = correction_bound_q1(alpha);
  r.bound_q2 = correction_bound_q2(alpha);
  return r;
}

}  // namespace ginibre_edge
