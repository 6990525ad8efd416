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
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "ginibre_edge/limit_laws.hpp"
#include "ginibre_edge/linalg.hpp"

namespace ginibre_edge {

struct AutoTruncation {
  double eps = 1e-14;
};

struct FredholmConfig {
  std::variant<std::int64_t, AutoTruncation> truncation = AutoTruncation{};
  /// Gauss-Legendre nodes in the base theta rule (split over four panels).
  int quad_order = 64;
  /// Entries whose Gaussian prefactor e^{-(j-k)^2/(4 alpha)} is below this are not evaluated.
  double band_eps = 1e-16;
  /// Trailing off-diagonal entries below this magnitude end a row's band.
  double entry_eps = 1e-12;
  /// Agreement required between successive quadrature refinements.
  double quad_tol = 1e-11;
};

/// Truncated operator matrix with rows j = 1..dim. Entries with odd j - k are
/// structurally zero, so the two parity classes are stored as separate
/// symmetric band matrices.
class OperatorBlock {
 public:
  OperatorBlock() = default;
  OperatorBlock(std::int64_t dim, linalg::SymmetricBandMatrix odd, linalg::SymmetricBandMatrix even);

  std::int64_t dim() const { return dim_; }
  /// Entry (j, k), 1-based.
  double operator()(std::int64_t j, std::int64_t k) const;
  const linalg::SymmetricBandMatrix& odd_block() const { return odd_; }
  const linalg::SymmetricBandMatrix& even_block() const { return even_; }
  /// Largest |j - k| with a stored entry.
  std::int64_t bandwidth() const;
  /// Rows that carry any nonzero entry; rows beyond are identity rows of I - M.
  std::int64_t effective_dim() const;
  bool parity_checked() const { return true; }

  linalg::DenseMatrix dense() const;

 private:
  std::int64_t dim_ = 0;
  linalg::SymmetricBandMatrix odd_;
  linalg::SymmetricBandMatrix even_;
};

double trace(const OperatorBlock& block);
double hs_norm(const OperatorBlock& block);
/// det(I - block) without clamping.
linalg::LogDeterminant fredholm_log_det(const OperatorBlock& block);

/// Single entry of the limiting operator by Gauss-Legendre on [0, pi/2],
/// order doubled until successive values agree to 1e-12.
double limit_entry(std::int64_t j, std::int64_t k, double x, double alpha, int quad_order = 64);

/// Truncation size N chosen by the Auto rule at x.
std::int64_t auto_truncation(double x, double alpha, double eps);

OperatorBlock assemble_limit_block(double x, double alpha, const FredholmConfig& cfg = {});

struct FredholmValue {
  double value = 0.0;
  double raw_determinant = 0.0;
  std::int64_t dim = 0;
  std::int64_t effective_dim = 0;
  std::int64_t bandwidth = 0;
  double trace = 0.0;
  double hs_norm = 0.0;
};

/// Clamps a determinant into [0, 1] if within 1e-10; throws NumericalQualityError otherwise.
double checked_probability(double det, const char* what);

FredholmValue evaluate_phi_tilde(double x, double alpha, const FredholmConfig& cfg = {});
double phi_tilde_alpha(double x, double alpha, const FredholmConfig& cfg = {});
std::vector<FredholmValue> phi_tilde_alpha_grid(std::span<const double> grid, double alpha,
                                                const FredholmConfig& cfg = {});

/// (sqrt 2 + 4 ln 2)/(2 sqrt(2 pi)).
double fredholm_small_alpha_constant();
/// 25/(16 e).
double fredholm_large_alpha_constant();

struct BoundaryReport {
  DistanceReport versus_normal;
  DistanceReport versus_gumbel;
};

/// sup |Phi~_alpha - Phi| with prediction C_0 sqrt(alpha) and sup |Phi~_alpha - Lambda|
/// with prediction C_inf (log log alpha)^2 / log alpha.
BoundaryReport boundary_report(double alpha, std::span<const double> grid, const FredholmConfig& cfg = {});
BoundaryReport boundary_report(double alpha);

struct StructureReport {
  std::int64_t parity_violations = 0;
  double symmetry_error = 0.0;
  double diag_min = 0.0;
  double diag_max = 0.0;
  /// max over pairs of |M_jk|^2 - M_jj M_kk (nonpositive when the inequality holds).
  double cauchy_schwarz_excess = 0.0;
  /// max over pairs of |M_jk| - M_pp with p = (j + k)/2.
  double midpoint_excess = 0.0;

  bool holds(double tol = 1e-12) const;
};

/// Checks the structural inequalities on the leading `rows` rows of the block.
StructureReport check_structure(const OperatorBlock& block, std::int64_t rows);

/// int_0^v s^{-1/2} (h + s)^{-1} e^{-(h+s)^2/2} ds by Gauss-Legendre after s = u^2.
double tail_integral_quadrature(double h, double v, int order = 64);
/// sqrt(pi / h^3) e^{-h^2/2}.
double tail_integral_asymptotic(double h);

}  // namespace ginibre_edge
