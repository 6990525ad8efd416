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


#include "ginibre_edge/gamma_product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/specfun.hpp"

namespace ginibre_edge {

namespace sf = specfun;

GammaProductDist::GammaProductDist(std::int64_t shape, std::int64_t factors)
    : shape_(shape), factors_(factors) {
  if (shape < 1 || factors < 1) throw DomainError("GammaProductDist: shape and factors must be >= 1");
  const double j = static_cast<double>(shape);
  const double k = static_cast<double>(factors);
  const double p1 = sf::polygamma(1, j);
  mean_ = k * sf::digamma(j);
  variance_ = k * p1;
  stddev_ = std::sqrt(variance_);
  lambda3_ = sf::polygamma(2, j) / (std::sqrt(k) * p1 * std::sqrt(p1));
  lambda4_ = sf::polygamma(3, j) / (k * p1 * p1);
}

double GammaProductDist::third_cumulant() const {
  return static_cast<double>(factors_) * sf::polygamma(2, static_cast<double>(shape_));
}

double GammaProductDist::fourth_cumulant() const {
  return static_cast<double>(factors_) * sf::polygamma(3, static_cast<double>(shape_));
}

double GammaProductDist::mgf_exponent(double lambda) const {
  const double j = static_cast<double>(shape_);
  if (!(lambda > -j)) throw DomainError("mgf_exponent: need lambda > -j");
  return static_cast<double>(factors_) * (sf::log_gamma(j + lambda) - sf::log_gamma(j));
}

TailMethod default_tail_method(std::int64_t factors, std::uint64_t seed) {
  if (factors == 1) return ExactK1{};
  if (factors >= 30) return Edgeworth{};
  return MonteCarlo{1'000'000, seed};
}

std::string method_name(const TailMethod& method) {
  struct Visitor {
    std::string operator()(const ExactK1&) const { return "exact"; }
    std::string operator()(const Edgeworth&) const { return "edgeworth"; }
    std::string operator()(const Chernoff&) const { return "chernoff"; }
    std::string operator()(const MonteCarlo&) const { return "mc"; }
  };
  return std::visit(Visitor{}, method);
}

namespace {

double edgeworth_correction(const GammaProductDist& d, double x) {
  const double l3 = d.lambda3();
  const double l4 = d.lambda4();
  const double x2 = x * x;
  return -l3 * (x2 - 1.0) / 6.0 - l4 * x * (x2 - 3.0) / 24.0 -
         l3 * l3 * x * (x2 * x2 - 10.0 * x2 + 15.0) / 72.0;
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// Edgeworth density divided by phi: 1 + l3 He3/6 + l4 He4/24 + l3^2 He6/72.
double edgeworth_density_factor(const GammaProductDist& d, double x) {
  const double l3 = d.lambda3();
  const double l4 = d.lambda4();
  const double x2 = x * x;
  const double he3 = x * (x2 - 3.0);
  const double he4 = x2 * (x2 - 6.0) + 3.0;
  const double he6 = x2 * (x2 * (x2 - 15.0) + 45.0) - 15.0;
  return 1.0 + l3 * he3 / 6.0 + l4 * he4 / 24.0 + l3 * l3 * he6 / 72.0;
}

// Standardised points where the Edgeworth survival function has a local
// minimum, i.e. where its density turns negative. Beyond |x| = 40 both tails
// underflow, so only that window is searched.
std::vector<double> edgeworth_local_minima(const GammaProductDist& d) {
  std::vector<double> out;
  constexpr double kEdge = 40.0;
  constexpr double kStep = 1.0 / 64.0;
  double a = -kEdge;
  double pa = edgeworth_density_factor(d, a);
  for (int i = 1; a < kEdge; ++i) {
    const double b = -kEdge + i * kStep;
    const double pb = edgeworth_density_factor(d, b);
    if (pa > 0.0 && pb <= 0.0) {
      double lo = a;
      double hi = b;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (edgeworth_density_factor(d, mid) > 0.0) lo = mid; else hi = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    pa = pb;
  }
  return out;
}

}  // namespace

double edgeworth_cdf(const GammaProductDist& dist, double x_std) {
  return sf::normal_cdf(x_std) + sf::normal_pdf(x_std) * edgeworth_correction(dist, x_std);
}

double edgeworth_sf(const GammaProductDist& dist, double x_std) {
  return sf::normal_sf(x_std) - sf::normal_pdf(x_std) * edgeworth_correction(dist, x_std);
}

ChernoffResult chernoff_bound_excess(const GammaProductDist& dist, double excess) {
  if (!(excess > 0.0)) throw DomainError("chernoff_bound: threshold must exceed k psi(j)");
  const double j = static_cast<double>(dist.shape());
  const double k = static_cast<double>(dist.factors());
  const double psi_j = sf::digamma(j);
  const double target = excess / k;
  // Solve psi(j + s) - psi(j) = target; the left side is increasing and concave.
  auto g = [&](double s) { return sf::digamma(j + s) - psi_j - target; };
  double lo = 0.0;
  double hi = std::max(1.0, target * j);
  while (g(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw NumericalQualityError("chernoff_bound: exponent search diverged");
  }
  double s = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double gs = g(s);
    if (gs > 0.0) hi = s; else lo = s;
    double next = s - gs / sf::polygamma(1, j + s);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - s) <= 1e-15 * std::max(1.0, s) || hi - lo <= 1e-15 * std::max(1.0, s)) {
      s = next;
      break;
    }
    s = next;
  }
  ChernoffResult r;
  r.exponent_s = s;
  r.log_bound = std::min(0.0, dist.mgf_exponent(s) - s * (dist.mean() + excess));
  r.bound = std::exp(r.log_bound);
  return r;
}

ChernoffResult chernoff_bound(const GammaProductDist& dist, double t) {
  if (!std::isfinite(t)) throw DomainError("chernoff_bound: threshold must be finite");
  return chernoff_bound_excess(dist, t - dist.mean());
}

double chernoff_excess_for(const GammaProductDist& dist, double level) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("chernoff_excess_for: level must lie in (0, 1)");
  // Along the optimal path the log-bound k(log G(j+s) - log G(j) - s psi(j+s)) decreases in s.
  const double j = static_cast<double>(dist.shape());
  const double k = static_cast<double>(dist.factors());
  const double target = std::log(level);
  const double lg_j = sf::log_gamma(j);
  auto log_bound = [&](double s) { return k * (sf::log_gamma(j + s) - lg_j - s * sf::digamma(j + s)); };
  double lo = 0.0;
  double hi = 1.0 / std::sqrt(k * sf::polygamma(1, j));
  while (log_bound(hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw NumericalQualityError("chernoff_excess_for: search diverged");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (log_bound(mid) > target) lo = mid; else hi = mid;
  }
  return k * (sf::digamma(j + hi) - sf::digamma(j));
}

TailEstimate tail(const GammaProductDist& dist, double t, const TailMethod& method) {
  if (!std::isfinite(t)) throw DomainError("tail: threshold must be finite");
  return TailEvaluator(dist, method).at(t);
}

double sample_log_gamma(double shape, Philox4x32& rng) {
  if (shape < 1.0) {
    const double boost = std::log(rng.uniform()) / shape;
    return sample_log_gamma(shape + 1.0, rng) + boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform32();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2 || std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return std::log(d) + std::log(v);
    }
  }
}

double sample_log(const GammaProductDist& dist, Philox4x32& rng) {
  const double shape = static_cast<double>(dist.shape());
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  const std::int64_t k = dist.factors();
  double sum = static_cast<double>(k) * std::log(d);
  double acc = 1.0;
  for (std::int64_t r = 0; r < k; ++r) {
    for (;;) {
      double x;
      double v;
      do {
        x = rng.normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = rng.uniform32();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2 || std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
        acc *= v;
        break;
      }
    }
    if (acc < 1e-250 || acc > 1e250) {
      sum += std::log(acc);
      acc = 1.0;
    }
  }
  return sum + std::log(acc);
}

std::vector<double> sample_batch(const GammaProductDist& dist, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw DomainError("sample_batch: count must be >= 1");
  std::vector<double> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    Philox4x32 rng(seed, static_cast<std::uint64_t>(i));
    out[static_cast<std::size_t>(i)] = sample_log(dist, rng);
  }
  return out;
}

TailEvaluator::TailEvaluator(GammaProductDist dist, TailMethod method)
    : dist_(dist), method_(method) {
  if (std::holds_alternative<ExactK1>(method_) && dist_.factors() != 1) {
    throw DomainError("ExactK1 tails require k = 1");
  }
  if (const auto* mc = std::get_if<MonteCarlo>(&method_)) {
    if (mc->samples < 1) throw DomainError("MonteCarlo: samples must be >= 1");
    const std::uint64_t stream_seed =
        mix_seed(mc->seed, (static_cast<std::uint64_t>(dist_.shape()) << 32) ^
                               static_cast<std::uint64_t>(dist_.factors()));
    auto samples = sample_batch(dist_, static_cast<std::size_t>(mc->samples), stream_seed);
    const double mu = dist_.mean();
    for (double& s : samples) s -= mu;
    std::sort(samples.begin(), samples.end());
    centered_ = std::make_shared<const std::vector<double>>(std::move(samples));
  }
  if (std::holds_alternative<Edgeworth>(method_)) {
    for (double x : edgeworth_local_minima(dist_)) {
      edgeworth_floor_.emplace_back(x, clamp01(edgeworth_sf(dist_, x)));
    }
  }
}

TailEstimate TailEvaluator::above_mean(double excess) const {
  if (std::isnan(excess)) throw DomainError("tail: threshold must not be NaN");
  struct Visitor {
    const TailEvaluator& self;
    double e;
    TailEstimate operator()(const ExactK1&) const {
      const double j = static_cast<double>(self.dist_.shape());
      const double t = self.dist_.mean() + e;
      if (t > 709.0) return {0.0, 0.0};
      return {sf::gamma_upper_reg(j, std::exp(t)), 0.0};
    }
    TailEstimate operator()(const Edgeworth&) const {
      // Running minimum from the left keeps the tail nonincreasing where the
      // expansion's density is negative.
      const double x = e / self.dist_.stddev();
      double p = clamp01(edgeworth_sf(self.dist_, x));
      for (const auto& [at, floor] : self.edgeworth_floor_) {
        if (at < x) p = std::min(p, floor);
      }
      return {p, 0.0};
    }
    TailEstimate operator()(const Chernoff&) const {
      return {chernoff_bound_excess(self.dist_, e).bound, 0.0};
    }
    TailEstimate operator()(const MonteCarlo&) const {
      const auto& s = *self.centered_;
      const auto first = std::lower_bound(s.begin(), s.end(), e);
      const double n = static_cast<double>(s.size());
      const double p = static_cast<double>(s.end() - first) / n;
      return {p, std::sqrt(p * (1.0 - p) / n)};
    }
  };
  return std::visit(Visitor{*this, excess}, method_);
}

}  // namespace ginibre_edge
