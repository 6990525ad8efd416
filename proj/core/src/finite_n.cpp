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


#include "ginibre_edge/finite_n.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "band_assembly.hpp"
#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/specfun.hpp"

namespace ginibre_edge {

namespace sf = specfun;

namespace {

constexpr double kFactorCut = 1e-18;
constexpr double kEntryCut = 1e-20;

std::vector<TailEvaluator> build_evaluators(const EnsembleParams& params, const TailMethod& method) {
  const std::int64_t n = params.n();
  std::vector<TailEvaluator> ev;
  ev.reserve(static_cast<std::size_t>(n));
  for (std::int64_t m = 1; m <= n; ++m) ev.emplace_back(GammaProductDist(m, params.k()), method);
  return ev;
}

std::vector<double> build_cutoffs(const std::vector<TailEvaluator>& ev, double level) {
  std::vector<double> cut(ev.size());
  const auto n = static_cast<std::int64_t>(ev.size());
  ExceptionGuard guard;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    guard.run([&] {
      cut[static_cast<std::size_t>(i)] = chernoff_excess_for(ev[static_cast<std::size_t>(i)].dist(), level);
    });
  }
  guard.rethrow();
  return cut;
}

double centre(const EnsembleParams& p) {
  return static_cast<double>(p.k()) * sf::digamma(static_cast<double>(p.n()));
}

}  // namespace

SpectralRadiusLaw::SpectralRadiusLaw(const EnsembleParams& params, const TailMethod& method)
    : params_(params), method_(method), centre_(centre(params)) {
  const auto s = finite_scaling(params);
  a_n_ = s.a_n;
  b_n_ = s.b_n;
  evaluators_ = build_evaluators(params, method);
  cutoff_ = build_cutoffs(evaluators_, kFactorCut);
}

FiniteValue SpectralRadiusLaw::evaluate(double x) const {
  FiniteValue r;
  if (std::isnan(x)) throw DomainError("spectral_radius_cdf: x is NaN");
  if (x == std::numeric_limits<double>::infinity()) {
    r.cdf = 1.0;
    return r;
  }
  if (x == -std::numeric_limits<double>::infinity()) return r;
  const double t = centre_ + (a_n_ + b_n_ * x) / std::sqrt(params_.alpha_n());
  const bool chernoff = std::holds_alternative<Chernoff>(method_);
  double log_cdf = 0.0;
  double rel_var = 0.0;
  for (std::size_t i = 0; i < evaluators_.size(); ++i) {
    const auto& ev = evaluators_[i];
    const double excess = t - ev.dist().mean();
    if (excess >= cutoff_[i]) {
      ++r.truncated;
      continue;
    }
    TailEstimate est;
    if (chernoff && !(excess > 0.0)) {
      est.probability = 1.0;
    } else {
      est = ev.above_mean(excess);
    }
    if (est.probability >= 1.0) {
      r.cdf = 0.0;
      r.standard_error = 0.0;
      return r;
    }
    log_cdf += std::log1p(-est.probability);
    const double ratio = est.standard_error / (1.0 - est.probability);
    rel_var += ratio * ratio;
  }
  r.cdf = std::exp(log_cdf);
  r.standard_error = r.cdf * std::sqrt(rel_var);
  return r;
}

double rightmost_log_prefactor(const EnsembleParams& params, std::int64_t j, std::int64_t k) {
  const std::int64_t n = params.n();
  if (j < 1 || k < 1 || j > n || k > n) throw DomainError("rightmost_log_prefactor: index out of range");
  if ((j - k) % 2 != 0) throw DomainError("rightmost_log_prefactor: j - k must be even");
  const std::int64_t q = std::abs(j - k) / 2;
  const double m = static_cast<double>(n - (j + k) / 2);
  const double qd = static_cast<double>(q);
  double s = 0.0;
  for (std::int64_t i = 1; i <= q; ++i) s += std::log1p(-qd / (m + static_cast<double>(i)));
  return 0.5 * static_cast<double>(params.k()) * s;
}

struct FiniteRightmostProvider {
  const RightmostLaw& law;
  double t;
  std::int64_t band;

  std::size_t shape_index(std::int64_t p) const { return static_cast<std::size_t>(law.params_.n() - p); }

  double excess(std::int64_t p) const { return t - law.evaluators_[shape_index(p)].dist().mean(); }

  double theta_cut(std::int64_t p) const {
    const double room = law.cutoff_[shape_index(p)] - excess(p);
    return room > 0.0 ? detail::theta_for_room(room) : 0.0;
  }

  std::int64_t q_limit(std::int64_t) const { return band; }

  void integrand(std::int64_t p, const std::vector<double>& theta, std::vector<double>& out) const {
    const auto& ev = law.evaluators_[shape_index(p)];
    const double e0 = excess(p);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const auto est = ev.above_mean(e0 - detail::log_cos2(theta[i]));
      if (est.standard_error > law.budget_) {
        throw NumericalQualityError("rightmost: Monte Carlo standard error exceeds the per-entry budget");
      }
      out[i] = est.probability;
    }
  }

  double log_prefactor(std::int64_t p, std::int64_t q) const {
    return rightmost_log_prefactor(law.params_, p + q, p - q);
  }
};

RightmostLaw::RightmostLaw(const EnsembleParams& params, const TailMethod& method, const FredholmConfig& cfg,
                           double mc_stderr_budget)
    : params_(params), method_(method), cfg_(cfg), budget_(mc_stderr_budget), centre_(centre(params)) {
  if (std::holds_alternative<Chernoff>(method)) {
    throw DomainError("rightmost: Chernoff bounds do not give matrix entries");
  }
  if (!(mc_stderr_budget > 0.0)) throw DomainError("rightmost: stderr budget must be positive");
  const auto s = finite_scaling(params);
  a_tilde_n_ = s.a_tilde_n;
  b_tilde_n_ = s.b_tilde_n;
  evaluators_ = build_evaluators(params, method);
  cutoff_ = build_cutoffs(evaluators_, kEntryCut);
}

double RightmostLaw::threshold(double x) const {
  return centre_ + (a_tilde_n_ + b_tilde_n_ * x) / std::sqrt(params_.alpha_n());
}

OperatorBlock RightmostLaw::assemble(double x) const {
  if (!std::isfinite(x)) throw DomainError("rightmost: x must be finite");
  if (!(cfg_.band_eps > 0.0 && cfg_.band_eps < 1.0)) throw DomainError("rightmost: band_eps must lie in (0, 1)");
  // The exact prefactor is below exp(-q^2/(2 alpha_n)).
  const double reach = std::sqrt(2.0 * params_.alpha_n() * -std::log(cfg_.band_eps));
  const std::int64_t band = std::min<std::int64_t>(params_.n(), static_cast<std::int64_t>(reach));
  FiniteRightmostProvider pv{*this, threshold(x), band};
  detail::AssemblyOptions opt;
  opt.quad_order = cfg_.quad_order;
  opt.entry_eps = cfg_.entry_eps;
  opt.tol = cfg_.quad_tol;
  // Monte Carlo tails make the integrand a step function; refining past the
  // per-entry statistical error gains nothing.
  if (std::holds_alternative<MonteCarlo>(method_)) opt.tol = std::max(opt.tol, budget_);
  return detail::assemble(pv, params_.n(), opt);
}

FiniteValue RightmostLaw::evaluate(double x) const {
  FiniteValue r;
  if (x == std::numeric_limits<double>::infinity()) {
    r.cdf = 1.0;
    return r;
  }
  if (x == -std::numeric_limits<double>::infinity()) return r;
  const auto block = assemble(x);
  r.cdf = checked_probability(fredholm_log_det(block).value(), "rightmost_cdf");
  return r;
}

FiniteLawResult spectral_radius_cdf(const FiniteLawRequest& req) {
  if (req.statistic != Statistic::spectral_radius) throw DomainError("spectral_radius_cdf: wrong statistic");
  const SpectralRadiusLaw law(req.params, req.tail_method);
  FiniteLawResult out;
  const std::size_t n = req.x_grid.size();
  out.cdf.resize(n);
  out.standard_error.resize(n);
  out.truncated_factors.resize(n);
  const auto sn = static_cast<std::int64_t>(n);
  ExceptionGuard guard;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < sn; ++i) {
    guard.run([&] {
      const auto v = law.evaluate(req.x_grid[static_cast<std::size_t>(i)]);
      out.cdf[static_cast<std::size_t>(i)] = v.cdf;
      out.standard_error[static_cast<std::size_t>(i)] = v.standard_error;
      out.truncated_factors[static_cast<std::size_t>(i)] = v.truncated;
    });
  }
  guard.rethrow();
  return out;
}

FiniteLawResult rightmost_cdf(const FiniteLawRequest& req) {
  if (req.statistic != Statistic::rightmost) throw DomainError("rightmost_cdf: wrong statistic");
  const RightmostLaw law(req.params, req.tail_method, req.operator_config, req.mc_stderr_budget);
  FiniteLawResult out;
  const std::size_t n = req.x_grid.size();
  out.cdf.resize(n);
  out.standard_error.assign(n, 0.0);
  out.truncated_factors.assign(n, 0);
  const auto sn = static_cast<std::int64_t>(n);
  ExceptionGuard guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < sn; ++i) {
    guard.run([&] { out.cdf[static_cast<std::size_t>(i)] = law.evaluate(req.x_grid[static_cast<std::size_t>(i)]).cdf; });
  }
  guard.rethrow();
  return out;
}

double finite_rightmost_entry(std::int64_t j, std::int64_t k, double x, const EnsembleParams& params,
                              const TailMethod& method) {
  const std::int64_t n = params.n();
  if (j < 1 || k < 1 || j > n || k > n) throw DomainError("finite_rightmost_entry: index out of range");
  if ((j - k) % 2 != 0) return 0.0;
  const std::int64_t p = (j + k) / 2;
  const double q = static_cast<double>(std::abs(j - k) / 2);
  const TailEvaluator ev(GammaProductDist(n + 1 - p, params.k()), method);
  const auto s = finite_scaling(params);
  const double t = centre(params) + (s.a_tilde_n + s.b_tilde_n * x) / std::sqrt(params.alpha_n());
  const double e0 = t - ev.dist().mean();
  const double room = chernoff_excess_for(ev.dist(), kEntryCut) - e0;
  if (!(room > 0.0)) return 0.0;
  const double cut = detail::theta_for_room(room);
  const double kd = static_cast<double>(params.k());
  const double log_pref = kd * sf::log_gamma(static_cast<double>(n - p + 1)) -
                          0.5 * kd * (sf::log_gamma(static_cast<double>(n - j + 1)) +
                                      sf::log_gamma(static_cast<double>(n - k + 1)));
  const double pref = std::exp(log_pref);
  auto value = [&](int level) {
    const auto rule = detail::theta_rule(cut, level, 64);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double th = rule.nodes[i];
      acc += rule.weights[i] * std::cos(2.0 * q * th) * ev.above_mean(e0 - detail::log_cos2(th)).probability;
    }
    return pref * (2.0 / sf::kPi) * acc;
  };
  double prev = value(0);
  for (int level = 1; level <= 10; ++level) {
    const double next = value(level);
    if (std::fabs(next - prev) <= 1e-12) return next;
    prev = next;
  }
  throw NumericalQualityError("finite_rightmost_entry: quadrature did not converge");
}

}  // namespace ginibre_edge
