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

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace ginibre_edge::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule of the given order (thread-safe; references stay valid).
const GaussLegendreRule& gauss_legendre(int order);

/// Composite Gauss-Legendre nodes/weights mapped onto the given panel edges.
void append_panels(const std::vector<double>& edges, int order, std::vector<double>& nodes,
                   std::vector<double>& weights);

template <class F>
double integrate(F&& f, double a, double b, int order) {
  const auto& rule = gauss_legendre(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

template <class F>
double integrate_composite(F&& f, double a, double b, int panels, int order) {
  double s = 0.0;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) s += integrate(f, a + p * h, a + (p + 1) * h, order);
  return s;
}

namespace detail {

template <class F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson with absolute tolerance, started from `panels` equal pieces.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, int panels = 64, int max_depth = 40) {
  double total = 0.0;
  const double h = (b - a) / panels;
  double fa = f(a);
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double hi = (p + 1 == panels) ? b : a + (p + 1) * h;
    const double m = 0.5 * (lo + hi);
    const double fm = f(m);
    const double fb = f(hi);
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    total += detail::simpson_step(f, lo, hi, fa, fm, fb, whole, abs_tol / panels, max_depth);
    fa = fb;
  }
  return total;
}

/// Golden-section search for a maximiser of a unimodal f on [a, b].
template <class F>
std::pair<double, double> golden_maximize(F&& f, double a, double b, double tol) {
  constexpr double r = 0.61803398874989484820;
  double c = b - r * (b - a);
  double d = a + r * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace ginibre_edge::quadrature
