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
#include <vector>

#include "ginibre_edge/limit_laws.hpp"
#include "ginibre_edge/scaling.hpp"

namespace ginibre_edge {

/// Empirical distribution function of a sample.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);

  std::size_t count() const { return sorted_.size(); }
  const std::vector<double>& sorted_samples() const { return sorted_; }
  /// Fraction of samples <= x.
  double operator()(double x) const;

 private:
  std::vector<double> sorted_;
};

/// Rescaled spectral radius X_n drawn through the Gamma-product representation
/// 2 log max|Z_j| = max_j log Y_j; sample i uses the RNG stream (seed, i).
EmpiricalCdf sample_spectral_radius(const EnsembleParams& params, std::size_t count, std::uint64_t seed);

/// One-sample Kolmogorov-Smirnov statistic sup |F_N - F|.
double ks_distance(const EmpiricalCdf& emp, const Cdf& f);

}  // namespace ginibre_edge
