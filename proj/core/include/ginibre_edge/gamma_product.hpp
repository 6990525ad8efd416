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
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ginibre_edge/rng.hpp"

namespace ginibre_edge {

/// Law of log Y_j, Y_j a product of k independent Gamma(j, 1) variables.
class GammaProductDist {
 public:
  GammaProductDist(std::int64_t shape, std::int64_t factors);

  std::int64_t shape() const { return shape_; }
  std::int64_t factors() const { return factors_; }

  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double stddev() const { return stddev_; }
  double third_cumulant() const;
  double fourth_cumulant() const;
  /// Standardised third and fourth cumulants.
  double lambda3() const { return lambda3_; }
  double lambda4() const { return lambda4_; }

  /// log E[Y^lambda] = k (log Gamma(j + lambda) - log Gamma(j)), lambda > -j.
  double mgf_exponent(double lambda) const;

 private:
  std::int64_t shape_;
  std::int64_t factors_;
  double mean_;
  double variance_;
  double stddev_;
  double lambda3_;
  double lambda4_;
};

struct ExactK1 {};
struct Edgeworth {};
struct Chernoff {};
struct MonteCarlo {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

using TailMethod = std::variant<ExactK1, Edgeworth, Chernoff, MonteCarlo>;

/// ExactK1 for k = 1, Edgeworth for k >= 30, Monte Carlo otherwise.
TailMethod default_tail_method(std::int64_t factors, std::uint64_t seed = 0);
std::string method_name(const TailMethod& method);

struct TailEstimate {
  double probability = 0.0;
  double standard_error = 0.0;
};

/// P(log Y_j >= t).
TailEstimate tail(const GammaProductDist& dist, double t, const TailMethod& method);

/// Second-order Edgeworth approximation of P((log Y_j - mean)/sd <= x).
double edgeworth_cdf(const GammaProductDist& dist, double x_std);
/// Complement of edgeworth_cdf, evaluated without cancellation in the right tail.
double edgeworth_sf(const GammaProductDist& dist, double x_std);

struct ChernoffResult {
  double bound = 1.0;
  double log_bound = 0.0;
  double exponent_s = 0.0;
};

/// inf_{s>0} E[Y^s] e^{-s t}; requires t > k psi(j).
ChernoffResult chernoff_bound(const GammaProductDist& dist, double t);
/// Same bound parameterised by the excess t - k psi(j) > 0.
ChernoffResult chernoff_bound_excess(const GammaProductDist& dist, double excess);
/// Smallest excess whose Chernoff bound is below `level`.
double chernoff_excess_for(const GammaProductDist& dist, double level);

/// log of one Gamma(shape, 1) draw.
double sample_log_gamma(double shape, Philox4x32& rng);
double sample_log(const GammaProductDist& dist, Philox4x32& rng);
/// Draw i uses the stream (seed, i), so output is independent of the thread count.
std::vector<double> sample_batch(const GammaProductDist& dist, std::size_t count, std::uint64_t seed);

/// Tail evaluation for one distribution; Monte Carlo samples are drawn once
/// and reused across thresholds. Edgeworth tails are the running minimum of
/// edgeworth_sf, so they stay nonincreasing where the expansion is not a law.
class TailEvaluator {
 public:
  TailEvaluator(GammaProductDist dist, TailMethod method);

  const GammaProductDist& dist() const { return dist_; }
  const TailMethod& method() const { return method_; }

  /// P(log Y_j - k psi(j) >= excess).
  TailEstimate above_mean(double excess) const;
  /// P(log Y_j >= t).
  TailEstimate at(double t) const { return above_mean(t - dist_.mean()); }

 private:
  GammaProductDist dist_;
  TailMethod method_;
  std::shared_ptr<const std::vector<double>> centered_;
  std::vector<std::pair<double, double>> edgeworth_floor_;
};

}  // namespace ginibre_edge
