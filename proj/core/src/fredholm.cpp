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


#include "ginibre_edge/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "band_assembly.hpp"
#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/quadrature.hpp"
#include "ginibre_edge/scaling.hpp"
#include "ginibre_edge/specfun.hpp"

namespace ginibre_edge {

namespace sf = specfun;

namespace {

// Psi(9.3) ~ 7e-21: integrand values beyond this argument are dropped.
constexpr double kArgumentCut = 9.3;
constexpr std::int64_t kMaxDim = 20'000'000;

struct LimitProvider {
  double alpha;
  double sqrt_alpha;
  double v1;
  std::int64_t band;

  double v(std::int64_t p) const { return static_cast<double>(p - 1) / sqrt_alpha + v1; }

  double theta_cut(std::int64_t p) const {
    const double room = (kArgumentCut - v(p)) / sqrt_alpha;
    return room > 0.0 ? detail::theta_for_room(room) : 0.0;
  }

  std::int64_t q_limit(std::int64_t) const { return band; }

  void integrand(std::int64_t p, const std::vector<double>& theta, std::vector<double>& out) const {
    const double vp = v(p);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      out[i] = sf::normal_sf(vp - sqrt_alpha * detail::log_cos2(theta[i]));
    }
  }

  double log_prefactor(std::int64_t, std::int64_t q) const {
    const double qd = static_cast<double>(q);
    return -qd * qd / alpha;
  }
};

LimitProvider limit_provider(double x, double alpha, double band_eps) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Fredholm: alpha must be positive");
  if (!(band_eps > 0.0 && band_eps < 1.0)) throw DomainError("Fredholm: band_eps must lie in (0, 1)");
  const auto c = limit_constants(alpha);
  LimitProvider pv{};
  pv.alpha = alpha;
  pv.sqrt_alpha = std::sqrt(alpha);
  pv.v1 = c.a_tilde + c.b_tilde * x;
  const double reach = std::sqrt(alpha * -std::log(band_eps));
  pv.band = reach >= static_cast<double>(kMaxDim) ? kMaxDim : static_cast<std::int64_t>(reach);
  return pv;
}

detail::AssemblyOptions options(const FredholmConfig& cfg) {
  if (cfg.quad_order < 8) throw DomainError("FredholmConfig: quad_order must be >= 8");
  detail::AssemblyOptions opt;
  opt.quad_order = cfg.quad_order;
  opt.entry_eps = cfg.entry_eps;
  opt.tol = cfg.quad_tol;
  return opt;
}

}  // namespace

OperatorBlock::OperatorBlock(std::int64_t dim, linalg::SymmetricBandMatrix odd, linalg::SymmetricBandMatrix even)
    : dim_(dim), odd_(std::move(odd)), even_(std::move(even)) {}

double OperatorBlock::operator()(std::int64_t j, std::int64_t k) const {
  if (j < 1 || k < 1 || j > dim_ || k > dim_) throw DomainError("OperatorBlock: index out of range");
  if ((j - k) % 2 != 0) return 0.0;
  const auto& blk = (j % 2 == 1) ? odd_ : even_;
  const auto a = static_cast<std::size_t>((j - 1) / 2);
  const auto b = static_cast<std::size_t>((k - 1) / 2);
  if (a >= blk.dim() || b >= blk.dim()) return 0.0;
  return blk(a, b);
}

std::int64_t OperatorBlock::bandwidth() const {
  return 2 * static_cast<std::int64_t>(std::max(odd_.half_band(), even_.half_band()));
}

std::int64_t OperatorBlock::effective_dim() const {
  const auto rows = static_cast<std::int64_t>(std::max(2 * odd_.dim(), 2 * even_.dim()));
  return std::min(dim_, rows);
}

linalg::DenseMatrix OperatorBlock::dense() const {
  if (dim_ > 20000) throw DomainError("OperatorBlock::dense: dimension too large");
  linalg::DenseMatrix m(static_cast<std::size_t>(dim_));
  for (std::int64_t j = 1; j <= dim_; ++j) {
    for (std::int64_t k = 1; k <= dim_; ++k) m(j - 1, k - 1) = (*this)(j, k);
  }
  return m;
}

double trace(const OperatorBlock& block) {
  double t = 0.0;
  for (const auto* blk : {&block.odd_block(), &block.even_block()}) {
    for (std::size_t i = 0; i < blk->dim(); ++i) t += blk->band(i, 0);
  }
  return t;
}

double hs_norm(const OperatorBlock& block) {
  double s = 0.0;
  for (const auto* blk : {&block.odd_block(), &block.even_block()}) {
    for (std::size_t i = 0; i < blk->dim(); ++i) {
      s += blk->band(i, 0) * blk->band(i, 0);
      for (std::size_t d = 1; d <= blk->half_band(); ++d) s += 2.0 * blk->band(i, d) * blk->band(i, d);
    }
  }
  return std::sqrt(s);
}

linalg::LogDeterminant fredholm_log_det(const OperatorBlock& block) {
  const auto a = linalg::log_det_identity_minus(block.odd_block());
  const auto b = linalg::log_det_identity_minus(block.even_block());
  return {a.log_abs + b.log_abs, a.sign * b.sign};
}

double limit_entry(std::int64_t j, std::int64_t k, double x, double alpha, int quad_order) {
  if (j < 1 || k < 1) throw DomainError("limit_entry: indices must be >= 1");
  if ((j - k) % 2 != 0) return 0.0;
  const auto pv = limit_provider(x, alpha, 1e-300);
  const std::int64_t p = (j + k) / 2;
  const double q = static_cast<double>(std::abs(j - k) / 2);
  const double cut = pv.theta_cut(p);
  if (!(cut > 0.0)) return 0.0;
  const double pref = std::exp(-q * q / alpha);
  if (pref == 0.0) return 0.0;
  auto value = [&](int level) {
    const auto rule = detail::theta_rule(cut, level, quad_order);
    std::vector<double> g(rule.nodes.size());
    pv.integrand(p, rule.nodes, g);
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += rule.weights[i] * std::cos(2.0 * q * rule.nodes[i]) * g[i];
    return pref * (2.0 / sf::kPi) * s;
  };
  double prev = value(0);
  for (int level = 1; level <= 10; ++level) {
    const double next = value(level);
    if (std::fabs(next - prev) <= 1e-12) return next;
    prev = next;
  }
  throw NumericalQualityError("limit_entry: quadrature did not converge");
}

std::int64_t auto_truncation(double x, double alpha, double eps) {
  if (!(eps > 0.0)) throw DomainError("auto_truncation: eps must be positive");
  const auto c = limit_constants(alpha);
  const double h = 1.0 / std::sqrt(alpha);
  const double v1 = c.a_tilde + c.b_tilde * x;
  auto v = [&](std::int64_t n) { return v1 + static_cast<double>(n - 1) * h; };
  auto tail_ok = [&](std::int64_t n) {
    const double w = v(n + 1);
    return w > 0.0 && sf::normal_sf(w) + sf::normal_pdf(w) / (w * w * h) < eps;
  };
  std::int64_t n = 1;
  if (v(1) < 8.0) {
    const double need = std::ceil((8.0 - v1) / h) + 1.0;
    if (need > static_cast<double>(kMaxDim)) throw DomainError("auto_truncation: operator too large");
    n = std::max<std::int64_t>(1, static_cast<std::int64_t>(need));
  }
  while (!tail_ok(n)) {
    n = n + std::max<std::int64_t>(1, n / 8);
    if (n > kMaxDim) throw DomainError("auto_truncation: operator too large");
  }
  return 2 * n;
}

OperatorBlock assemble_limit_block(double x, double alpha, const FredholmConfig& cfg) {
  if (!std::isfinite(x)) throw DomainError("assemble_limit_block: x must be finite");
  std::int64_t dim = 0;
  if (const auto* fixed = std::get_if<std::int64_t>(&cfg.truncation)) {
    if (*fixed < 1) throw DomainError("FredholmConfig: truncation must be >= 1");
    dim = *fixed;
  } else {
    dim = auto_truncation(x, alpha, std::get<AutoTruncation>(cfg.truncation).eps);
  }
  const auto pv = limit_provider(x, alpha, cfg.band_eps);
  return detail::assemble(pv, dim, options(cfg));
}

double checked_probability(double det, const char* what) {
  constexpr double tol = 1e-10;
  if (det < -tol || det > 1.0 + tol || std::isnan(det)) {
    throw NumericalQualityError(std::string(what) + ": determinant " + std::to_string(det) +
                                " outside [0, 1]; truncation or quadrature insufficient");
  }
  return std::clamp(det, 0.0, 1.0);
}

FredholmValue evaluate_phi_tilde(double x, double alpha, const FredholmConfig& cfg) {
  FredholmValue r;
  if (x == std::numeric_limits<double>::infinity()) {
    r.value = r.raw_determinant = 1.0;
    return r;
  }
  if (x == -std::numeric_limits<double>::infinity()) return r;
  const auto block = assemble_limit_block(x, alpha, cfg);
  const auto det = fredholm_log_det(block);
  r.raw_determinant = det.value();
  r.value = checked_probability(r.raw_determinant, "phi_tilde_alpha");
  r.dim = block.dim();
  r.effective_dim = block.effective_dim();
  r.bandwidth = block.bandwidth();
  r.trace = trace(block);
  r.hs_norm = hs_norm(block);
  return r;
}

double phi_tilde_alpha(double x, double alpha, const FredholmConfig& cfg) {
  return evaluate_phi_tilde(x, alpha, cfg).value;
}

std::vector<FredholmValue> phi_tilde_alpha_grid(std::span<const double> grid, double alpha,
                                                const FredholmConfig& cfg) {
  std::vector<FredholmValue> out(grid.size());
  const auto n = static_cast<std::int64_t>(grid.size());
  ExceptionGuard guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    guard.run([&] { out[static_cast<std::size_t>(i)] = evaluate_phi_tilde(grid[static_cast<std::size_t>(i)], alpha, cfg); });
  }
  guard.rethrow();
  return out;
}

double fredholm_small_alpha_constant() { return (sf::kSqrt2 + 4.0 * std::log(2.0)) / (2.0 * sf::kSqrt2Pi); }

double fredholm_large_alpha_constant() { return 25.0 / (16.0 * sf::kE); }

BoundaryReport boundary_report(double alpha, std::span<const double> grid, const FredholmConfig& cfg) {
  const Cdf tilde = [&](double x) { return phi_tilde_alpha(x, alpha, cfg); };
  BoundaryReport r;
  r.versus_normal = with_prediction(sup_distance(tilde, sf::normal_cdf, grid),
                                    fredholm_small_alpha_constant() * std::sqrt(alpha));
  double large = std::numeric_limits<double>::quiet_NaN();
  if (alpha > sf::kE) {
    const double l = std::log(alpha);
    large = fredholm_large_alpha_constant() * std::log(l) * std::log(l) / l;
  }
  r.versus_gumbel = with_prediction(sup_distance(tilde, sf::gumbel_cdf, grid), large);
  return r;
}

BoundaryReport boundary_report(double alpha) {
  const auto grid = default_grid(alpha);
  return boundary_report(alpha, grid, FredholmConfig{});
}

bool StructureReport::holds(double tol) const {
  return parity_violations == 0 && symmetry_error <= tol && diag_min >= -tol && diag_max <= 1.0 + tol &&
         cauchy_schwarz_excess <= tol && midpoint_excess <= tol;
}

StructureReport check_structure(const OperatorBlock& block, std::int64_t rows) {
  rows = std::min(rows, block.dim());
  StructureReport r;
  r.diag_min = std::numeric_limits<double>::infinity();
  r.diag_max = -std::numeric_limits<double>::infinity();
  r.cauchy_schwarz_excess = -std::numeric_limits<double>::infinity();
  r.midpoint_excess = -std::numeric_limits<double>::infinity();
  for (std::int64_t j = 1; j <= rows; ++j) {
    const double d = block(j, j);
    r.diag_min = std::min(r.diag_min, d);
    r.diag_max = std::max(r.diag_max, d);
    for (std::int64_t k = 1; k <= rows; ++k) {
      const double m = block(j, k);
      if ((j - k) % 2 != 0) {
        if (m != 0.0) ++r.parity_violations;
        continue;
      }
      r.symmetry_error = std::max(r.symmetry_error, std::fabs(m - block(k, j)));
      r.cauchy_schwarz_excess = std::max(r.cauchy_schwarz_excess, m * m - block(j, j) * block(k, k));
      const std::int64_t p = (j + k) / 2;
      r.midpoint_excess = std::max(r.midpoint_excess, std::fabs(m) - block(p, p));
    }
  }
  return r;
}

double tail_integral_quadrature(double h, double v, int order) {
  if (!(h > 0.0) || !(v > 0.0)) throw DomainError("tail_integral_quadrature: need h > 0 and v > 0");
  auto f = [h](double u) {
    const double s = h + u * u;
    return 2.0 / s * std::exp(-0.5 * s * s);
  };
  return quadrature::integrate_composite(f, 0.0, std::sqrt(v), 32, order);
}

double tail_integral_asymptotic(double h) { return std::sqrt(sf::kPi / (h * h * h)) * std::exp(-0.5 * h * h); }

}  // namespace ginibre_edge
