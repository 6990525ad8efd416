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


#include "ginibre_edge/scaling.hpp"

#include <cmath>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/specfun.hpp"

namespace ginibre_edge {

namespace sf = specfun;

namespace {

const double kE1 = std::exp(1.0 / sf::kSqrt2Pi);
const double kE2 = std::exp(std::pow(2.0, 0.6) * std::pow(sf::kPi, -0.8));
const double kLogTilde = std::log(std::pow(2.0, -0.75) * sf::kPi);

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive and finite");
}

double w(double t) { return 2.0 * t * std::log(t); }

}  // namespace

EnsembleParams::EnsembleParams(std::int64_t n, std::int64_t k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw DomainError("EnsembleParams: n and k must be >= 1");
}

double ell2_infinity(double alpha) {
  require_alpha(alpha);
  return std::log(sf::kSqrt2Pi * std::log(alpha + kE1));
}

double scale_a(double alpha) {
  require_alpha(alpha);
  return std::sqrt(std::log1p(alpha)) - ell2_infinity(alpha) / std::sqrt(std::log(alpha + sf::kE));
}

double scale_b(double alpha) {
  require_alpha(alpha);
  return 1.0 / std::sqrt(std::log(alpha + sf::kE));
}

double scale_a_tilde(double alpha) {
  require_alpha(alpha);
  const double bracket = kLogTilde + 1.25 * std::log(std::log(alpha + kE2));
  return std::sqrt(0.5 * std::log1p(alpha)) -
         sf::kSqrt2 * bracket / std::sqrt(std::log(alpha + sf::kE * sf::kE));
}

double scale_b_tilde(double alpha) {
  require_alpha(alpha);
  return sf::kSqrt2 / std::sqrt(std::log(alpha + sf::kE * sf::kE));
}

FiniteScaling finite_scaling(const EnsembleParams& params) {
  const double an = params.alpha_n();
  return {an, scale_a(an), scale_b(an), scale_a_tilde(an), scale_b_tilde(an)};
}

LimitConstants limit_constants(double alpha) {
  require_alpha(alpha);
  LimitConstants c{};
  c.alpha = alpha;
  c.a = scale_a(alpha);
  c.b = scale_b(alpha);
  c.a_tilde = scale_a_tilde(alpha);
  c.b_tilde = scale_b_tilde(alpha);
  const double l3 = std::sqrt(std::log(alpha + sf::kE));
  c.c1 = std::sqrt(std::log1p(alpha)) / w(alpha + 1.0) - 2.0 / (w(alpha + kE1) * l3) +
         ell2_infinity(alpha) / (w(alpha + sf::kE) * l3);
  c.c2 = 1.0 / (2.0 * (alpha + sf::kE) * l3 * l3 * l3);
  return c;
}

double v_alpha(double j, double x, const LimitConstants& c) {
  return (j - 1.0) / std::sqrt(c.alpha) + c.a + c.b * x;
}

double v_alpha(double j, double x, double alpha) {
  require_alpha(alpha);
  return (j - 1.0) / std::sqrt(alpha) + scale_a(alpha) + scale_b(alpha) * x;
}

double v_tilde_alpha(double j, double x, const LimitConstants& c) {
  return (j - 1.0) / std::sqrt(c.alpha) + c.a_tilde + c.b_tilde * x;
}

double v_tilde_alpha(double j, double x, double alpha) {
  require_alpha(alpha);
  return (j - 1.0) / std::sqrt(alpha) + scale_a_tilde(alpha) + scale_b_tilde(alpha) * x;
}

double u_n(double j, double x, const EnsembleParams& params) {
  const double an = params.alpha_n();
  return (j - 1.0) / std::sqrt(an) + scale_a(an) + scale_b(an) * x;
}

double q1(std::int64_t j, double x, const LimitConstants& c) {
  const double v = v_alpha(static_cast<double>(j), x, c);
  const double sa = std::sqrt(c.alpha);
  const double jd = static_cast<double>(j);
  return (2.0 * c.alpha * (v * v - 1.0) - 3.0 * sa * (2.0 * jd - 1.0) * v + 6.0 * jd * (jd - 1.0)) /
         (12.0 * sa);
}

double q1(std::int64_t j, double x, double alpha) { return q1(j, x, limit_constants(alpha)); }

double q2(std::int64_t j, double x, const LimitConstants& c) {
  return c.c1 - c.c2 * x - (static_cast<double>(j) - 1.0) / (2.0 * c.alpha * std::sqrt(c.alpha));
}

double q2(std::int64_t j, double x, double alpha) { return q2(j, x, limit_constants(alpha)); }

namespace {

double centre(const EnsembleParams& p) {
  return static_cast<double>(p.k()) * sf::digamma(static_cast<double>(p.n()));
}

}  // namespace

double rescale_spectral(const EnsembleParams& params, double max_log_modulus) {
  const auto s = finite_scaling(params);
  return (std::sqrt(s.alpha_n) * (2.0 * max_log_modulus - centre(params)) - s.a_n) / s.b_n;
}

double spectral_threshold(const EnsembleParams& params, double x) {
  const auto s = finite_scaling(params);
  return 0.5 * centre(params) + (s.a_n + s.b_n * x) / (2.0 * std::sqrt(s.alpha_n));
}

double rescale_rightmost(const EnsembleParams& params, double log_max_real) {
  const auto s = finite_scaling(params);
  return (std::sqrt(s.alpha_n) * (2.0 * log_max_real - centre(params)) - s.a_tilde_n) / s.b_tilde_n;
}

double rightmost_threshold(const EnsembleParams& params, double x) {
  const auto s = finite_scaling(params);
  return 0.5 * centre(params) + (s.a_tilde_n + s.b_tilde_n * x) / (2.0 * std::sqrt(s.alpha_n));
}

}  // namespace ginibre_edge
