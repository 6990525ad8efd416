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
#include <span>
#include <vector>

#include "ginibre_edge/fredholm.hpp"
#include "ginibre_edge/gamma_product.hpp"
#include "ginibre_edge/scaling.hpp"

namespace ginibre_edge {

enum class Statistic { spectral_radius, rightmost };

struct FiniteLawRequest {
  EnsembleParams params{1, 1};
  Statistic statistic = Statistic::spectral_radius;
  TailMethod tail_method = ExactK1{};
  std::vector<double> x_grid;
  /// Largest admissible Monte Carlo standard error of a single matrix entry.
  double mc_stderr_budget = 1e-3;
  /// Band, entry and quadrature settings shared with the limiting operator.
  FredholmConfig operator_config{};
};

struct FiniteLawResult {
  std::vector<double> cdf;
  std::vector<double> standard_error;
  /// Factors set to exactly 1 because their Chernoff bound fell below 1e-18.
  std::vector<std::int64_t> truncated_factors;
};

struct FiniteValue {
  double cdf = 0.0;
  double standard_error = 0.0;
  std::int64_t truncated = 0;
};

/// P(X_n <= x) = prod_j (1 - P(log Y_{n+1-j} >= k psi(n) + (a_n + b_n x)/sqrt(alpha_n))).
/// Tail evaluators are built once, so one instance serves a whole grid.
class SpectralRadiusLaw {
 public:
  SpectralRadiusLaw(const EnsembleParams& params, const TailMethod& method);

  FiniteValue evaluate(double x) const;
  double operator()(double x) const { return evaluate(x).cdf; }
  const EnsembleParams& params() const { return params_; }

 private:
  EnsembleParams params_;
  TailMethod method_;
  double centre_;
  double a_n_;
  double b_n_;
  std::vector<TailEvaluator> evaluators_;
  std::vector<double> cutoff_;
};

/// P(X~_n <= x) = det(I_n - M~^(n)(x)).
class RightmostLaw {
 public:
  RightmostLaw(const EnsembleParams& params, const TailMethod& method, const FredholmConfig& cfg = {},
               double mc_stderr_budget = 1e-3);

  OperatorBlock assemble(double x) const;
  FiniteValue evaluate(double x) const;
  double operator()(double x) const { return evaluate(x).cdf; }
  /// Threshold T(x) = k psi(n) + (a~_n + b~_n x)/sqrt(alpha_n).
  double threshold(double x) const;
  const EnsembleParams& params() const { return params_; }

 private:
  friend struct FiniteRightmostProvider;
  EnsembleParams params_;
  TailMethod method_;
  FredholmConfig cfg_;
  double budget_;
  double centre_;
  double a_tilde_n_;
  double b_tilde_n_;
  std::vector<TailEvaluator> evaluators_;
  std::vector<double> cutoff_;
};

FiniteLawResult spectral_radius_cdf(const FiniteLawRequest& req);
FiniteLawResult rightmost_cdf(const FiniteLawRequest& req);

/// Entry (j, k) of M~^(n)(x), computed on its own (no shared caches).
double finite_rightmost_entry(std::int64_t j, std::int64_t k, double x, const EnsembleParams& params,
                              const TailMethod& method);

/// log of ((n - p)!)^k / ((n - j)! (n - k)!)^{k/2}, p = (j + k)/2, as a sum of log1p terms.
double rightmost_log_prefactor(const EnsembleParams& params, std::int64_t j, std::int64_t k);

}  // namespace ginibre_edge
