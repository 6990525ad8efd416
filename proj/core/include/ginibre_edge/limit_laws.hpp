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
#include <functional>
#include <span>
#include <vector>

#include "ginibre_edge/scaling.hpp"

namespace ginibre_edge {

/// Phi_alpha(x) = prod_{j>=1} Phi(v_alpha(j, x)).
struct PhiAlphaLaw {
  double alpha = 1.0;
  double tail_eps = 1e-14;
};

double phi_alpha(const PhiAlphaLaw& law, double x);
double log_phi_alpha(const PhiAlphaLaw& law, double x);
/// Number of factors J kept by the truncation rule at x.
std::int64_t phi_alpha_terms(const PhiAlphaLaw& law, double x);
/// log of the product over exactly j = 1..terms, summed term by term.
double log_phi_alpha_partial(const PhiAlphaLaw& law, double x, std::int64_t terms);

using Cdf = std::function<double(double)>;

struct DistanceReport {
  double sup_distance = 0.0;
  double argmax_x = 0.0;
  double w1_distance = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
};

/// Sets `predicted` and `ratio = sup_distance / predicted`.
DistanceReport with_prediction(DistanceReport report, double predicted);

/// Grid sup of |F - G| refined by golden section around the coarse maximiser,
/// together with the W1 distance over the grid span.
DistanceReport sup_distance(const Cdf& f, const Cdf& g, std::span<const double> grid);
/// Integral of |F - G| over the grid span (adaptive Simpson, tolerance 1e-8).
double w1_distance(const Cdf& f, const Cdf& g, std::span<const double> grid);

std::vector<double> linear_grid(double lo, double hi, std::size_t count);
/// [-10, ell2_infinity(alpha) + 10] with 4001 points.
std::vector<double> default_grid(double alpha);

/// (log log alpha_n)^2 / (2 e log alpha_n).
double rate_predictor_gumbel(double alpha_n);
/// (log log alpha_n)^2 / (2 log alpha_n).
double w1_predictor_gumbel(double alpha_n);
/// sup_x |d1 - d2 x| phi(x).
double sup_linear_times_pdf(double d1, double d2);
/// sup_x phi(x) |sqrt(alpha_n) - x/(4n)|.
double rate_predictor_gaussian(const EnsembleParams& params);
/// integral of phi(x) |sqrt(alpha_n) - x/(4n)|.
double w1_predictor_gaussian(const EnsembleParams& params);

struct FixedAlphaPrediction {
  double sup = 0.0;
  double argmax_x = 0.0;
  double w1 = 0.0;
};

/// Pointwise first-order correction Phi_alpha(x) |sum_j (phi/Phi)(v_j)(q1/n + (alpha_n - alpha) q2)|.
double fixed_alpha_correction(const EnsembleParams& params, double alpha, double x);
FixedAlphaPrediction rate_predictor_fixed_alpha(const EnsembleParams& params, double alpha,
                                                std::span<const double> grid);
double rate_predictor_fixed_alpha(const EnsembleParams& params, double alpha);

enum class BetaRegime { zero, finite, infinite };

/// beta = n^3 / k and the supremum of phi(x)|sqrt(alpha_n) - x/(4n)| in that regime.
struct BetaClassification {
  BetaRegime regime = BetaRegime::finite;
  double beta = 0.0;
  double supremum = 0.0;
};

BetaClassification classify_beta(const EnsembleParams& params);

/// Pointwise large-alpha error model for |Phi_alpha - Lambda|.
double gumbel_pointwise_predictor(double alpha, double x);

struct CorrectionBoundReport {
  double sup_q1 = 0.0;
  double bound_q1 = 0.0;
  double sup_q2 = 0.0;
  double bound_q2 = 0.0;

  bool holds() const { return sup_q1 <= bound_q1 && sup_q2 <= bound_q2; }
};

double correction_bound_q1(double alpha);
double correction_bound_q2(double alpha);
CorrectionBoundReport correction_bound_check(double alpha, std::span<const double> grid);

}  // namespace ginibre_edge
