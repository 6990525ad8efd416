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

// Scalar special functions. All functions are pure and thread-safe.

namespace ginibre_edge::specfun {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kE = 2.71828182845904523536;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Digamma function psi(z) for z > 0. Relative error <= 1e-13 for z >= 1,
/// including the neighbourhood of the positive root.
double digamma(double z);

/// Polygamma psi^(m)(z) for m in {1, 2, 3} and z > 0.
double polygamma(int m, double z);

/// log Gamma(z) for z > 0.
double log_gamma(double z);

/// log(1 + x) - x, accurate for small |x|; x > -1.
double log1pmx(double x);

double normal_pdf(double x);
double normal_cdf(double x);
/// Upper tail 1 - Phi(x), evaluated through erfc so the relative accuracy
/// holds deep into the right tail.
double normal_sf(double x);
/// log Phi(x); finite for every finite x.
double log_normal_cdf(double x);
/// log(1 - Phi(x)); finite for every finite x.
double log_normal_sf(double x);

/// Gumbel distribution function exp(-exp(-x)).
double gumbel_cdf(double x);

/// Regularized upper incomplete gamma Q(a, z) = P(G >= z), G ~ Gamma(a, 1).
double gamma_upper_reg(double a, double z);
/// Regularized lower incomplete gamma P(a, z) = 1 - Q(a, z).
double gamma_lower_reg(double a, double z);
/// log Q(a, z), usable where Q underflows.
double log_gamma_upper_reg(double a, double z);

}  // namespace ginibre_edge::specfun
