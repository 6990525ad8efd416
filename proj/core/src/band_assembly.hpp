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

// Assembly of symmetric operators whose entries have the form
//   M_{p+q, p-q} = exp(L(p, q)) * (2/pi) int_0^{theta_p} cos(2 q theta) g_p(theta) d theta.
// Rows are generated per half-sum index p so that g_p is evaluated once per node.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ginibre_edge/errors.hpp"
#include "ginibre_edge/parallel.hpp"
#include "ginibre_edge/fredholm.hpp"
#include "ginibre_edge/quadrature.hpp"
#include "ginibre_edge/specfun.hpp"

namespace ginibre_edge::detail {

struct AssemblyOptions {
  int quad_order = 64;
  double entry_eps = 1e-12;
  double tol = 1e-11;
  int max_level = 7;
  std::int64_t bucket = 32;
};

struct ThetaRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline ThetaRule theta_rule(double theta_cut, int level, int quad_order) {
  constexpr double half_pi = 0.5 * specfun::kPi;
  constexpr double graded_width = 0.1;
  const int order = std::max(8, quad_order / 4);
  std::vector<double> edges;
  const double smooth_end = std::min(theta_cut, half_pi - graded_width);
  for (int i = 0; i <= 4; ++i) edges.push_back(smooth_end * i / 4.0);
  if (theta_cut > smooth_end) {
    // Geometric panels toward the logarithmic endpoint at pi/2.
    double gap = graded_width;
    for (;;) {
      gap *= 0.25;
      const double e = half_pi - gap;
      if (e >= theta_cut || gap < 1e-15) break;
      edges.push_back(e);
    }
    edges.push_back(theta_cut);
  }
  std::vector<double> fine;
  const int split = 1 << level;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    for (int s = 0; s < split; ++s) fine.push_back(edges[i] + (edges[i + 1] - edges[i]) * s / split);
  }
  fine.push_back(edges.back());
  ThetaRule r;
  quadrature::append_panels(fine, order, r.nodes, r.weights);
  return r;
}

/// theta at which cos^2(theta) = exp(-room); room >= 0.
inline double theta_for_room(double room) {
  if (room <= 0.0) return 0.0;
  const double one_minus_c = -std::expm1(-0.5 * room);
  return 2.0 * std::asin(std::sqrt(0.5 * one_minus_c));
}

/// log cos^2(theta) without cancellation near 0.
inline double log_cos2(double theta) {
  if (theta < 0.25 * specfun::kPi) {
    const double s = std::sin(0.5 * theta);
    return 2.0 * std::log1p(-2.0 * s * s);
  }
  return 2.0 * std::log(std::sin(std::max(0.0, 0.5 * specfun::kPi - theta)));
}

template <class Provider>
std::vector<double> assemble_row(const Provider& pv, std::int64_t dim, std::int64_t p, int level,
                                 const AssemblyOptions& opt) {
  const double cut = pv.theta_cut(p);
  if (!(cut > 0.0)) return {};
  const std::int64_t qmax = std::min({pv.q_limit(p), p - 1, dim - p});
  const ThetaRule rule = theta_rule(cut, level, opt.quad_order);
  const std::size_t m = rule.nodes.size();
  std::vector<double> g(m);
  pv.integrand(p, rule.nodes, g);
  std::vector<double> wg(m);
  std::vector<double> c2(m);
  std::vector<double> t_prev(m, 1.0);
  std::vector<double> t_cur(m);
  for (std::size_t i = 0; i < m; ++i) {
    wg[i] = rule.weights[i] * g[i] * (2.0 / specfun::kPi);
    c2[i] = std::cos(2.0 * rule.nodes[i]);
    t_cur[i] = c2[i];
  }
  std::vector<double> row;
  double s0 = 0.0;
  for (std::size_t i = 0; i < m; ++i) s0 += wg[i];
  row.push_back(s0);
  constexpr int kQuietRun = 64;
  int quiet = 0;
  for (std::int64_t q = 1; q <= qmax; ++q) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += wg[i] * t_cur[i];
    const double lp = pv.log_prefactor(p, q);
    const double entry = lp < -745.0 ? 0.0 : std::exp(lp) * s;
    row.push_back(entry);
    quiet = std::fabs(entry) < opt.entry_eps ? quiet + 1 : 0;
    if (quiet >= kQuietRun || lp < -745.0) break;
    for (std::size_t i = 0; i < m; ++i) {
      const double next = 2.0 * c2[i] * t_cur[i] - t_prev[i];
      t_prev[i] = t_cur[i];
      t_cur[i] = next;
    }
  }
  while (row.size() > 1 && std::fabs(row.back()) < opt.entry_eps) row.pop_back();
  return row;
}

inline double row_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    d = std::max(d, std::fabs(x - y));
  }
  return d;
}

/// Smallest refinement level whose row agrees with the next level to tol.
template <class Provider>
int converged_level(const Provider& pv, std::int64_t dim, std::int64_t p, const AssemblyOptions& opt) {
  auto coarse = assemble_row(pv, dim, p, 0, opt);
  for (int level = 0; level < opt.max_level; ++level) {
    auto fine = assemble_row(pv, dim, p, level + 1, opt);
    if (row_difference(coarse, fine) <= opt.tol) return level + 1;
    coarse = std::move(fine);
  }
  throw NumericalQualityError("operator assembly: theta quadrature did not converge");
}

template <class Provider>
OperatorBlock assemble(const Provider& pv, std::int64_t dim, const AssemblyOptions& opt) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(dim) + 1);
  const std::int64_t buckets = (dim + opt.bucket - 1) / opt.bucket;
  ExceptionGuard guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < buckets; ++b) {
    guard.run([&] {
      const std::int64_t first = 1 + b * opt.bucket;
      const std::int64_t last = std::min(dim, first + opt.bucket - 1);
      if (!(pv.theta_cut(first) > 0.0)) return;
      std::int64_t probe = last;
      while (probe > first && !(pv.theta_cut(probe) > 0.0)) --probe;
      const int level = std::max(converged_level(pv, dim, first, opt), converged_level(pv, dim, probe, opt));
      for (std::int64_t p = first; p <= last; ++p) {
        rows[static_cast<std::size_t>(p)] = assemble_row(pv, dim, p, level, opt);
      }
    });
  }
  guard.rethrow();
  std::size_t half_band = 0;
  std::int64_t last_row = 0;
  for (std::int64_t p = 1; p <= dim; ++p) {
    const auto& r = rows[static_cast<std::size_t>(p)];
    if (r.empty()) continue;
    half_band = std::max(half_band, r.size() - 1);
    for (std::size_t q = 0; q < r.size(); ++q) {
      if (r[q] != 0.0) last_row = std::max(last_row, p + static_cast<std::int64_t>(q));
    }
  }
  const std::int64_t eff = std::max<std::int64_t>(last_row, 0);
  linalg::SymmetricBandMatrix odd(static_cast<std::size_t>((eff + 1) / 2), half_band);
  linalg::SymmetricBandMatrix even(static_cast<std::size_t>(eff / 2), half_band);
  for (std::int64_t p = 1; p <= dim; ++p) {
    auto& r = rows[static_cast<std::size_t>(p)];
    for (std::size_t q = 0; q < r.size(); ++q) {
      const std::int64_t k = p - static_cast<std::int64_t>(q);
      const std::int64_t j = p + static_cast<std::int64_t>(q);
      if (j > eff) break;
      auto& blk = (k % 2 == 1) ? odd : even;
      blk.band(static_cast<std::size_t>((k - 1) / 2), q) = r[q];
    }
    std::vector<double>().swap(r);
  }
  odd.compact();
  even.compact();
  return OperatorBlock(dim, std::move(odd), std::move(even));
}

}  // namespace ginibre_edge::detail
