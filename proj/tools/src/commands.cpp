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


#include "ginibre_edge_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/finite_n.hpp"
#include "ginibre_edge/limit_laws.hpp"
#include "ginibre_edge/rng.hpp"
#include "ginibre_edge/sampler.hpp"
#include "ginibre_edge/specfun.hpp"

namespace ginibre_edge::cli {
namespace {

std::vector<double> grid_or(const RunConfig& c, std::vector<double> fallback) {
  return c.grid ? c.grid->points() : std::move(fallback);
}

std::vector<double> grid_or_default(const RunConfig& c) { return grid_or(c, GridSpec{}.points()); }

// MC tails are refused once their error swamps the smaller of F and 1 - F.
void check_mc_quality(const std::vector<double>& cdf, const std::vector<double>& se,
                      const std::vector<double>& xs) {
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    const double room = std::min(cdf[i], 1.0 - cdf[i]);
    if (room >= 1e-3 && se[i] > 0.25 * room) {
      throw NumericalQualityError("Monte Carlo standard error " + format_double(se[i]) + " at x = " +
                                  format_double(xs[i]) + " exceeds a quarter of min(F, 1 - F); raise --mc-samples");
    }
  }
}

}  // namespace

TailMethod tail_method(const RunConfig& c) {
  if (c.tail == "exact") return ExactK1{};
  if (c.tail == "edgeworth") return Edgeworth{};
  if (c.tail == "chernoff") return Chernoff{};
  if (c.tail == "mc") return MonteCarlo{c.mc_samples, c.seed};
  TailMethod m = default_tail_method(c.k, c.seed);
  if (auto* mc = std::get_if<MonteCarlo>(&m)) mc->samples = c.mc_samples;
  return m;
}

FredholmConfig operator_config(const RunConfig& c) {
  FredholmConfig f;
  if (c.truncation > 0) f.truncation = c.truncation;
  f.quad_order = c.quad_order;
  f.band_eps = c.band_eps;
  f.entry_eps = c.entry_eps;
  f.quad_tol = c.quad_tol;
  return f;
}

Table cmd_limit(const RunConfig& c) {
  const auto xs = grid_or_default(c);
  Table t;
  if (c.mode == "fredholm") {
    t.columns = {"x", "F", "trace", "hs_norm"};
    const auto values = phi_tilde_alpha_grid(xs, *c.alpha, operator_config(c));
    std::int64_t dim = 0;
    std::int64_t band = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      t.add_row({xs[i], values[i].value, values[i].trace, values[i].hs_norm});
      dim = std::max(dim, values[i].effective_dim);
      band = std::max(band, values[i].bandwidth);
    }
    t.diagnostics = {{"max_effective_dim", dim}, {"max_bandwidth", band}};
    return t;
  }
  t.columns = {"x", "F"};
  const PhiAlphaLaw law{c.alpha.value_or(1.0)};
  for (double x : xs) {
    double f = 0.0;
    if (c.mode == "phi-alpha") {
      f = phi_alpha(law, x);
    } else if (c.mode == "gumbel") {
      f = specfun::gumbel_cdf(x);
    } else {
      f = specfun::normal_cdf(x);
    }
    t.add_row({x, f});
  }
  return t;
}

Table cmd_finite(const RunConfig& c, std::ostream& warnings) {
  FiniteLawRequest req;
  req.params = EnsembleParams(c.n, c.k);
  req.statistic = c.mode == "rightmost" ? Statistic::rightmost : Statistic::spectral_radius;
  req.tail_method = tail_method(c);
  req.x_grid = grid_or_default(c);
  req.mc_stderr_budget = c.mc_stderr_budget;
  req.operator_config = operator_config(c);
  if (req.statistic == Statistic::rightmost && c.n > 300 && c.k >= 2) {
    warnings << "warning: the rightmost law at n = " << c.n
             << " assembles an operator with O(n sqrt(n/k)) entries per grid point; this can take minutes";
    if (!std::holds_alternative<Edgeworth>(req.tail_method)) warnings << " (try --tail edgeworth)";
    warnings << "\n";
  }
  const auto res = req.statistic == Statistic::rightmost ? rightmost_cdf(req) : spectral_radius_cdf(req);
  if (std::holds_alternative<MonteCarlo>(req.tail_method)) {
    check_mc_quality(res.cdf, res.standard_error, req.x_grid);
  }
  Table t;
  t.columns = {"x", "F", "stderr"};
  std::int64_t truncated = 0;
  for (std::size_t i = 0; i < req.x_grid.size(); ++i) {
    t.add_row({req.x_grid[i], res.cdf[i], res.standard_error[i]});
    if (!res.truncated_factors.empty()) truncated = std::max(truncated, res.truncated_factors[i]);
  }
  t.diagnostics = {{"tail_method", method_name(req.tail_method)},
                   {"alpha_n", req.params.alpha_n()},
                   {"max_truncated_factors", truncated}};
  if (std::holds_alternative<Chernoff>(req.tail_method)) {
    t.diagnostics["note"] = "Chernoff tails give a lower bound on F";
  }
  return t;
}

Table cmd_rate(const RunConfig& c) {
  const EnsembleParams params(c.n, c.k);
  const double alpha_n = params.alpha_n();
  const double target_alpha = c.mode == "fixed" ? c.alpha.value_or(alpha_n) : alpha_n;
  const auto xs = grid_or(c, default_grid(target_alpha));
  const TailMethod method = tail_method(c);
  const SpectralRadiusLaw law(params, method);
  const Cdf finite = std::cref(law);

  DistanceReport r;
  double predicted_sup = 0.0;
  double predicted_w1 = 0.0;
  if (c.mode == "zero") {
    r = sup_distance(finite, specfun::normal_cdf, xs);
    predicted_sup = rate_predictor_gaussian(params);
    predicted_w1 = w1_predictor_gaussian(params);
  } else if (c.mode == "infinity") {
    r = sup_distance(finite, specfun::gumbel_cdf, xs);
    predicted_sup = rate_predictor_gumbel(alpha_n);
    predicted_w1 = w1_predictor_gumbel(alpha_n);
  } else {
    const PhiAlphaLaw limit{target_alpha};
    r = sup_distance(finite, [&](double x) { return phi_alpha(limit, x); }, xs);
    const auto p = rate_predictor_fixed_alpha(params, target_alpha, xs);
    predicted_sup = p.sup;
    predicted_w1 = p.w1;
  }
  Table t;
  t.columns = {"n", "k", "alpha_n", "alpha", "sup", "argmax_x", "w1",
               "predicted_sup", "ratio_sup", "predicted_w1", "ratio_w1"};
  t.add_row({static_cast<double>(c.n), static_cast<double>(c.k), alpha_n, target_alpha, r.sup_distance,
             r.argmax_x, r.w1_distance, predicted_sup, r.sup_distance / predicted_sup, predicted_w1,
             r.w1_distance / predicted_w1});
  const auto beta = classify_beta(params);
  t.diagnostics = {{"tail_method", method_name(method)},
                   {"beta", beta.beta},
                   {"beta_regime", beta.regime == BetaRegime::zero       ? "zero"
                                   : beta.regime == BetaRegime::infinite ? "infinite"
                                                                         : "finite"}};
  return t;
}

Table cmd_mc(const RunConfig& c) {
  const EnsembleParams params(c.n, c.k);
  const TailMethod method = tail_method(c);
  const auto emp = sample_spectral_radius(params, static_cast<std::size_t>(c.samples), c.seed);
  const SpectralRadiusLaw law(params, method);
  const double ks = ks_distance(emp, std::cref(law));
  const double critical = 1.63 / std::sqrt(static_cast<double>(c.samples));
  Table t;
  t.columns = {"n", "k", "samples", "seed", "ks", "critical_99"};
  t.add_row({static_cast<double>(c.n), static_cast<double>(c.k), static_cast<double>(c.samples),
             static_cast<double>(c.seed), ks, critical});
  t.diagnostics = {{"tail_method", method_name(method)}, {"ks_below_critical", ks < critical}};
  if (c.grid) {
    nlohmann::json curve = nlohmann::json::array();
    for (double x : c.grid->points()) curve.push_back({x, emp(x), law(x)});
    t.diagnostics["empirical_vs_exact"] = std::move(curve);
  }
  return t;
}

Table cmd_scan(const RunConfig& c) {
  const auto xs = grid_or_default(c);
  Table t;
  t.columns = c.fredholm ? std::vector<std::string>{"alpha", "x", "phi_alpha", "phi_tilde"}
                         : std::vector<std::string>{"alpha", "x", "phi_alpha"};
  const auto cfg = operator_config(c);
  std::vector<double> first_phi;
  std::vector<double> first_tilde;
  for (double alpha : c.alphas) {
    const PhiAlphaLaw law{alpha};
    std::vector<FredholmValue> tilde;
    if (c.fredholm) tilde = phi_tilde_alpha_grid(xs, alpha, cfg);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double f = phi_alpha(law, xs[i]);
      if (c.fredholm) {
        t.add_row({alpha, xs[i], f, tilde[i].value});
      } else {
        t.add_row({alpha, xs[i], f});
      }
    }
    first_phi.push_back(phi_alpha(law, xs.front()));
    if (c.fredholm) first_tilde.push_back(tilde.front().value);
  }
  const auto decreasing = [](const std::vector<double>& v) {
    return std::is_sorted(v.rbegin(), v.rend());
  };
  t.diagnostics = {{"phi_alpha_at_lowest_x", first_phi},
                   {"phi_alpha_decreasing_in_alpha_at_lowest_x", decreasing(first_phi)}};
  if (c.fredholm) {
    t.diagnostics["phi_tilde_at_lowest_x"] = first_tilde;
    t.diagnostics["phi_tilde_decreasing_in_alpha_at_lowest_x"] = decreasing(first_tilde);
  }
  return t;
}

Table cmd_selftest(const RunConfig&) {
  Table t;
  t.columns = {"check", "value", "expected", "tolerance", "pass"};
  nlohmann::json names = nlohmann::json::object();
  const auto add = [&](const char* name, double value, double expected, double tol) {
    const double id = static_cast<double>(t.rows.size() + 1);
    const bool ok = std::fabs(value - expected) <= tol;
    t.add_row({id, value, expected, tol, ok ? 1.0 : 0.0});
    names[std::to_string(t.rows.size())] = name;
  };

  const auto block = Philox4x32::bijection({0, 0, 0, 0}, {0, 0});
  add("philox_known_answer", static_cast<double>(block[0]), static_cast<double>(0x6627e8d5u), 0.0);
  add("digamma_at_one", specfun::digamma(1.0), -specfun::kEulerGamma, 1e-15);
  add("upper_gamma_at_one", specfun::gamma_upper_reg(1.0, 1.0), std::exp(-1.0), 1e-15);

  const double small = 1e-6;
  const PhiAlphaLaw law{small};
  const auto near = sup_distance([&](double x) { return phi_alpha(law, x); }, specfun::normal_cdf,
                                 linear_grid(-4.0, 4.0, 161));
  add("small_alpha_constant", near.sup_distance / std::sqrt(small), 1.0 / std::sqrt(2.0 * specfun::kPi), 0.02);

  const auto bounds = correction_bound_check(1.0, linear_grid(-5.0, 8.0, 131));
  add("correction_bounds", bounds.holds() ? 1.0 : 0.0, 1.0, 0.0);

  const auto op = assemble_limit_block(0.0, 1.0);
  add("operator_entry", op(2, 4), limit_entry(2, 4, 0.0, 1.0), 1e-10);
  const auto tilde = evaluate_phi_tilde(0.0, 1.0);
  add("fredholm_in_unit_interval", tilde.value >= 0.0 && tilde.value <= 1.0 ? 1.0 : 0.0, 1.0, 0.0);

  const GammaProductDist dist(50, 1);
  add("edgeworth_vs_exact", tail(dist, dist.mean(), Edgeworth{}).probability,
      tail(dist, dist.mean(), ExactK1{}).probability, 1e-3);

  const EnsembleParams one(1, 1);
  const std::size_t count = 20000;
  const auto emp = sample_spectral_radius(one, count, 1);
  const SpectralRadiusLaw exact(one, ExactK1{});
  add("sampler_ks", ks_distance(emp, std::cref(exact)), 0.0, 1.63 / std::sqrt(static_cast<double>(count)));

  t.diagnostics = {{"checks", names}};
  return t;
}

Table run(const RunConfig& c, std::ostream& warnings) {
  validate(c);
  if (c.command == "limit") return cmd_limit(c);
  if (c.command == "finite") return cmd_finite(c, warnings);
  if (c.command == "rate") return cmd_rate(c);
  if (c.command == "mc") return cmd_mc(c);
  if (c.command == "scan") return cmd_scan(c);
  return cmd_selftest(c);
}

}  // namespace ginibre_edge::cli
