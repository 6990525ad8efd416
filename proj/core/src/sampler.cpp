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


#include "ginibre_edge/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/gamma_product.hpp"
#include "ginibre_edge/rng.hpp"

namespace ginibre_edge {

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw DomainError("EmpiricalCdf: need at least one sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCdf sample_spectral_radius(const EnsembleParams& params, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw DomainError("sample_spectral_radius: count must be >= 1");
  std::vector<GammaProductDist> dists;
  for (std::int64_t j = 1; j <= params.n(); ++j) dists.emplace_back(j, params.k());
  std::vector<double> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    Philox4x32 rng(seed, static_cast<std::uint64_t>(i));
    double m = -INFINITY;
    for (const auto& d : dists) m = std::max(m, sample_log(d, rng));
    out[static_cast<std::size_t>(i)] = rescale_spectral(params, 0.5 * m);
  }
  return EmpiricalCdf(std::move(out));
}

double ks_distance(const EmpiricalCdf& emp, const Cdf& f) {
  const auto& xs = emp.sorted_samples();
  const auto n = static_cast<std::int64_t>(xs.size());
  const double nd = static_cast<double>(n);
  double d = 0.0;
#pragma omp parallel for reduction(max : d) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double fx = f(xs[static_cast<std::size_t>(i)]);
    const double hi = static_cast<double>(i + 1) / nd;
    const double lo = static_cast<double>(i) / nd;
    d = std::max(d, std::max(std::fabs(hi - fx), std::fabs(lo - fx)));
  }
  return d;
}

}  // namespace ginibre_edge
