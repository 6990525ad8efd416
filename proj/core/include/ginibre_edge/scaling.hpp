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


#pragma once

#include <cstdint>

namespace ginibre_edge {

/// The experiment (n, k) with alpha_n = n / k.
class EnsembleParams {
 public:
  EnsembleParams(std::int64_t n, std::int64_t k);

  std::int64_t n() const { return n_; }
  std::int64_t k() const { return k_; }
  double alpha_n() const { return static_cast<double>(n_) / static_cast<double>(k_); }

 private:
  std::int64_t n_;
  std::int64_t k_;
};

/// Centering and scaling at finite n (functions of alpha_n).
struct FiniteScaling {
  double alpha_n;
  double a_n;
  double b_n;
  double a_tilde_n;
  double b_tilde_n;
};

/// Limit constants at a fixed alpha, with the derivative constants c1 = a'(alpha)
/// and c2 = -b'(alpha).
struct LimitConstants {
  double alpha;
  double a;
  double b;
  double a_tilde;
  double b_tilde;
  double c1;
  double c2;
};

FiniteScaling finite_scaling(const EnsembleParams& params);
LimitConstants limit_constants(double alpha);

double scale_a(double alpha);
double scale_b(double alpha);
double scale_a_tilde(double alpha);
double scale_b_tilde(double alpha);

/// log(sqrt(2 pi) log(alpha + e^{1/sqrt(2 pi)})).
double ell2_infinity(double alpha);

/// v_alpha(j, x) = (j - 1)/sqrt(alpha) + a + b x.
double v_alpha(double j, double x, const LimitConstants& c);
double v_alpha(double j, double x, double alpha);
/// The same with (a_tilde, b_tilde).
double v_tilde_alpha(double j, double x, const LimitConstants& c);
double v_tilde_alpha(double j, double x, double alpha);
/// u_n(j, x) = (j - 1)/sqrt(alpha_n) + a_n + b_n x.
double u_n(double j, double x, const EnsembleParams& params);

double q1(std::int64_t j, double x, const LimitConstants& c);
double q1(std::int64_t j, double x, double alpha);
double q2(std::int64_t j, double x, const LimitConstants& c);
double q2(std::int64_t j, double x, double alpha);

/// X = (sqrt(alpha_n)(2L - k psi(n)) - a_n)/b_n for L = log max |Z_j|.
double rescale_spectral(const EnsembleParams& params, double max_log_modulus);
/// The log-modulus threshold L(x) with rescale_spectral(L(x)) = x.
double spectral_threshold(const EnsembleParams& params, double x);
/// Same maps for log max Re Z_j with (a_tilde_n, b_tilde_n).
double rescale_rightmost(const EnsembleParams& params, double log_max_real);
double rightmost_threshold(const EnsembleParams& params, double x);

}  // namespace ginibre_edge
