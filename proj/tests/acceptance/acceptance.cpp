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


// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// numbers next to the thresholds. Exit status is nonzero when any line fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ginibre_edge/ginibre_edge.hpp"

using namespace ginibre_edge;
namespace sf = ginibre_edge::specfun;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int failures = 0;

void run(const char* id, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_seconds;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s %s  %s  [%.1f s of %.0f s]\n", id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs, budget_seconds);
  std::fflush(stdout);
}

double phi_alpha_sup(double alpha, const Cdf& target) {
  const PhiAlphaLaw law{alpha};
  return sup_distance([&](double x) { return phi_alpha(law, x); }, target, default_grid(alpha)).sup_distance;
}

Outcome ac1() {
  const double want = 1.0 / std::sqrt(2.0 * sf::kPi);
  std::vector<double> r;
  for (double alpha : {1e-2, 1e-4, 1e-6}) r.push_back(phi_alpha_sup(alpha, sf::normal_cdf) / std::sqrt(alpha));
  const bool close = std::fabs(r[2] / want - 1.0) <= 0.02;
  const bool monotone = (r[0] < r[1] && r[1] < r[2]) || (r[0] > r[1] && r[1] > r[2]);
  return {close && monotone, fmt("r(1e-2,1e-4,1e-6) = %.6f %.6f %.6f; target %.5f +-2%%; monotone %s", r[0], r[1],
                                 r[2], want, monotone ? "yes" : "no")};
}

Outcome ac2() {
  const double target = 1.0 / (2.0 * sf::kE);
  std::vector<double> rho;
  for (double alpha : {1e6, 1e9, 1e12}) {
    const double l = std::log(alpha);
    rho.push_back(l / (std::log(l) * std::log(l)) * phi_alpha_sup(alpha, sf::gumbel_cdf));
  }
  bool band = true;
  for (double v : rho) band = band && v >= 0.10 && v <= 0.50;
  const bool decreasing = rho[0] > rho[1] && rho[1] > rho[2];
  const bool toward = std::fabs(rho[1] - target) < std::fabs(rho[0] - target) &&
                      std::fabs(rho[2] - target) < std::fabs(rho[1] - target);

  // Pointwise comparison on [-1, l2] at alpha = 1e9.
  const double alpha = 1e9;
  const PhiAlphaLaw law{alpha};
  const double l2 = ell2_infinity(alpha);
  double worst = 0.0;
  double worst_x = 0.0;
  const int points = 101;
  for (int i = 0; i < points; ++i) {
    const double x = -1.0 + (l2 + 1.0) * i / (points - 1);
    const double pred = gumbel_pointwise_predictor(alpha, x);
    const double err = std::fabs(phi_alpha(law, x) - sf::gumbel_cdf(x));
    const double dev = std::fabs(err / pred - 1.0);
    if (!(dev <= worst)) {
      worst = dev;
      worst_x = x;
    }
  }
  const bool pointwise = worst <= 0.20;
  return {band && decreasing && toward && pointwise,
          fmt("rho(1e6,1e9,1e12) = %.6f %.6f %.6f in [0.10,0.50]: %s; decreasing: %s; toward %.5f: %s; "
              "pointwise max |err/pred - 1| = %.3g at x = %.3f (limit 0.20)",
              rho[0], rho[1], rho[2], band ? "yes" : "no", decreasing ? "yes" : "no", target, toward ? "yes" : "no",
              worst, worst_x)};
}

Outcome ac3() {
  const double alpha = 1e-4;
  const auto r = boundary_report(alpha, default_grid(alpha));
  const double scaled = r.versus_normal.sup_distance / std::sqrt(alpha);
  const double want = fredholm_small_alpha_constant();
  return {std::fabs(scaled / want - 1.0) <= 0.10,
          fmt("sup|Phi~ - Phi|/sqrt(alpha) = %.6f; target %.4f +-10%%", scaled, want)};
}

Outcome ac4() {
  const auto v = evaluate_phi_tilde(0.0, 1e8);
  const double gap = std::fabs(v.value - std::exp(-1.0));
  const bool pass = v.trace >= 0.85 && v.trace <= 1.15 && gap <= 0.05;
  return {pass, fmt("Tr = %.6f (want [0.85,1.15]); det = %.6f, |det - 1/e| = %.4f (want <= 0.05); dim %lld, "
                    "effective %lld, bandwidth %lld",
                    v.trace, v.value, gap, static_cast<long long>(v.dim), static_cast<long long>(v.effective_dim),
                    static_cast<long long>(v.bandwidth))};
}

Outcome ac5() {
  const EnsembleParams p(10000, 1);
  const SpectralRadiusLaw law(p, ExactK1{});
  const auto r = sup_distance(std::cref(law), sf::gumbel_cdf, default_grid(p.alpha_n()));
  const double pred = rate_predictor_gumbel(p.alpha_n());
  const double ratio = r.sup_distance / pred;
  return {ratio >= 0.75 && ratio <= 1.25,
          fmt("sup = %.6f, predicted %.6f, ratio %.4f (want [0.75,1.25])", r.sup_distance, pred, ratio)};
}

Outcome ac6() {
  const EnsembleParams p(200, 2000000);
  const SpectralRadiusLaw law(p, Edgeworth{});
  const auto r = sup_distance(std::cref(law), sf::normal_cdf, default_grid(p.alpha_n()));
  const double ps = rate_predictor_gaussian(p);
  const double pw = w1_predictor_gaussian(p);
  const double rs = r.sup_distance / ps;
  const double rw = r.w1_distance / pw;
  return {std::fabs(rs - 1.0) <= 0.20 && std::fabs(rw - 1.0) <= 0.30,
          fmt("sup = %.6g vs %.6g (ratio %.4f, want +-20%%); W1 = %.6g vs %.6g (ratio %.4f, want +-30%%)",
              r.sup_distance, ps, rs, r.w1_distance, pw, rw)};
}

Outcome ac7() {
  const EnsembleParams p(100, 100);
  const double alpha = 1.0;
  const SpectralRadiusLaw law(p, default_tail_method(p.k()));
  const PhiAlphaLaw limit{alpha};
  const auto grid = default_grid(alpha);
  const auto r = sup_distance(std::cref(law), [&](double x) { return phi_alpha(limit, x); }, grid);
  const auto pred = rate_predictor_fixed_alpha(p, alpha, grid);
  const double ratio = r.sup_distance / pred.sup;
  return {ratio >= 0.5 && ratio <= 2.0,
          fmt("sup = %.6g, predicted %.6g, ratio %.4f (want [0.5,2])", r.sup_distance, pred.sup, ratio)};
}

Outcome ac8() {
  const std::size_t count = 200000;
  const EnsembleParams p(32, 32);
  const auto e = sample_spectral_radius(p, count, 20260101);
  const SpectralRadiusLaw law(p, default_tail_method(p.k()));
  const double ks = ks_distance(e, std::cref(law));
  const EnsembleParams q(32, 1);
  const auto e1 = sample_spectral_radius(q, count, 20260102);
  const SpectralRadiusLaw law1(q, ExactK1{});
  const double ks1 = ks_distance(e1, std::cref(law1));
  return {ks < 0.006 && ks1 < 0.004,
          fmt("KS(n=k=32, %s) = %.5f (want < 0.006); KS(n=32,k=1, exact) = %.5f (want < 0.004)",
              method_name(default_tail_method(p.k())).c_str(), ks, ks1)};
}

Outcome ac9() {
  struct Case {
    double alpha;
    double x;
  };
  const std::vector<Case> cases{{1e-4, -2.0}, {1e-4, 0.0}, {1e-4, 2.0}, {1.0, -1.0}, {1.0, 0.0},
                                {1.0, 2.0},   {1e4, 0.0},  {1e8, 0.0}};
  bool ok = true;
  double worst_cs = -1.0;
  double worst_mid = -1.0;
  double worst_trunc = 0.0;
  std::int64_t parity = 0;
  double sym = 0.0;
  for (const auto& c : cases) {
    const auto block = assemble_limit_block(c.x, c.alpha);
    const auto s = check_structure(block, std::min<std::int64_t>(block.effective_dim(), 400));
    ok = ok && s.holds() && s.diag_min >= 0.0 && s.diag_max <= 1.0;
    worst_cs = std::max(worst_cs, s.cauchy_schwarz_excess);
    worst_mid = std::max(worst_mid, s.midpoint_excess);
    parity += s.parity_violations;
    sym = std::max(sym, s.symmetry_error);

    const std::int64_t n = block.dim();
    FredholmConfig at_n;
    at_n.truncation = n;
    FredholmConfig at_2n;
    at_2n.truncation = 2 * n;
    const double d = std::fabs(fredholm_log_det(assemble_limit_block(c.x, c.alpha, at_n)).value() -
                               fredholm_log_det(assemble_limit_block(c.x, c.alpha, at_2n)).value());
    worst_trunc = std::max(worst_trunc, d);
  }
  const bool trunc_ok = worst_trunc < 1e-8;

  bool monotone = true;
  for (double alpha : {1e-4, 1.0, 1e4}) {
    const auto grid = linear_grid(-4.0, 6.0, 51);
    const auto v = phi_tilde_alpha_grid(grid, alpha);
    for (std::size_t i = 1; i < v.size(); ++i) monotone = monotone && v[i].value >= v[i - 1].value;
  }

  double worst_tail = 0.0;
  bool tail_ok = true;
  for (double h : {8.0, 12.0, 16.0}) {
    const double dev = std::fabs(tail_integral_quadrature(h, 1.0) / tail_integral_asymptotic(h) - 1.0);
    tail_ok = tail_ok && dev <= 5.0 / (h * h);
    worst_tail = std::max(worst_tail, dev * h * h);
  }
  return {ok && trunc_ok && monotone && tail_ok,
          fmt("parity violations %lld, symmetry err %.1e, CS excess %.2e, midpoint excess %.2e, det monotone %s, "
              "max |det(N)-det(2N)| = %.2e (want < 1e-8), tail integral max h^2|ratio-1| = %.3f (want <= 5)",
              static_cast<long long>(parity), sym, worst_cs, worst_mid, monotone ? "yes" : "no", worst_trunc,
              worst_tail)};
}

Outcome ac10() {
  bool ok = true;
  std::string detail;
  for (double alpha : {0.25, 1.0, 4.0}) {
    const auto r = correction_bound_check(alpha, default_grid(alpha));
    ok = ok && r.holds();
    detail += fmt("alpha=%g: %.4g <= %.4g, %.4g <= %.4g; ", alpha, r.sup_q1, r.bound_q1, r.sup_q2, r.bound_q2);
  }
  return {ok, detail};
}

}  // namespace

int main() {
  std::printf("ginibre-edge %s acceptance suite, %d threads\n", kVersion, thread_count());
  run("AC-1", 10, ac1);
  run("AC-2", 30, ac2);
  run("AC-3", 60, ac3);
  run("AC-4", 120, ac4);
  run("AC-5", 60, ac5);
  run("AC-6", 60, ac6);
  run("AC-7", 120, ac7);
  run("AC-8", 60, ac8);
  run("AC-9", 120, ac9);
  run("AC-10", 10, ac10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
