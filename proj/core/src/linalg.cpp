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


#include "ginibre_edge/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "ginibre_edge/errors.hpp"

namespace ginibre_edge::linalg {
namespace {

void accumulate(LogDeterminant& det, double pivot, bool swapped) {
  if (pivot == 0.0) {
    det.sign = 0;
    det.log_abs = -INFINITY;
    return;
  }
  if (pivot < 0.0) det.sign = -det.sign;
  if (swapped) det.sign = -det.sign;
  det.log_abs += std::log(std::fabs(pivot));
}

// Factorises a fixed 64 x 64 matrix and compares with long double elimination.
bool lapack_is_sound() {
  constexpr int n = 64;
  std::vector<double> a(n * n);
  std::vector<long double> w(n * n);
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  for (int i = 0; i < n * n; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    w[i] = a[i] = static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
  }
  long double want = 0.0L;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::fabs(w[i * n + k]) > std::fabs(w[p * n + k])) p = i;
    }
    for (int j = 0; j < n; ++j) std::swap(w[k * n + j], w[p * n + j]);
    want += std::log(std::fabs(w[k * n + k]));
    for (int i = k + 1; i < n; ++i) {
      const long double f = w[i * n + k] / w[k * n + k];
      for (int j = k; j < n; ++j) w[i * n + j] -= f * w[k * n + j];
    }
  }
  std::vector<lapack_int> ipiv(n);
  if (LAPACKE_dgetrf(LAPACK_ROW_MAJOR, n, n, a.data(), n, ipiv.data()) != 0) return false;
  double got = 0.0;
  for (int i = 0; i < n; ++i) got += std::log(std::fabs(a[i * n + i]));
  return std::fabs(got - static_cast<double>(want)) < 1e-9;
}

void require_sound_lapack() {
  static const bool sound = lapack_is_sound();
  if (!sound) {
    throw NumericalQualityError(
        "LAPACK self-check failed: the linked LU factorisation is wrong on this machine "
        "(for OpenBLAS try OPENBLAS_CORETYPE=Haswell)");
  }
}

}  // namespace

double LogDeterminant::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SymmetricBandMatrix::SymmetricBandMatrix(std::size_t dim, std::size_t half_band)
    : dim_(dim), half_band_(half_band), upper_(dim * (half_band + 1), 0.0) {}

double SymmetricBandMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  const std::size_t d = j - i;
  return d > half_band_ ? 0.0 : band(i, d);
}

void SymmetricBandMatrix::compact() {
  std::size_t width = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t d = half_band_; d > width; --d) {
      if (band(i, d) != 0.0) {
        width = d;
        break;
      }
    }
  }
  if (width == half_band_) return;
  std::vector<double> packed(dim_ * (width + 1));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t d = 0; d <= width; ++d) packed[i * (width + 1) + d] = band(i, d);
  }
  upper_ = std::move(packed);
  half_band_ = width;
}

void SymmetricBandMatrix::truncate(std::size_t new_dim) {
  if (new_dim >= dim_) return;
  upper_.resize(new_dim * (half_band_ + 1));
  for (std::size_t i = 0; i < new_dim; ++i) {
    for (std::size_t d = 0; d <= half_band_; ++d) {
      if (i + d >= new_dim) band(i, d) = 0.0;
    }
  }
  dim_ = new_dim;
}

LogDeterminant log_det(const DenseMatrix& a) {
  LogDeterminant det;
  if (a.dim == 0) return det;
  require_sound_lapack();
  std::vector<double> lu = a.data;
  std::vector<lapack_int> ipiv(a.dim);
  const auto n = static_cast<lapack_int>(a.dim);
  const lapack_int info = LAPACKE_dgetrf(LAPACK_ROW_MAJOR, n, n, lu.data(), n, ipiv.data());
  if (info < 0) throw NumericalQualityError("dense LU: invalid argument");
  for (lapack_int i = 0; i < n; ++i) accumulate(det, lu[i * a.dim + i], ipiv[i] != i + 1);
  return det;
}

LogDeterminant log_det_identity_minus(const SymmetricBandMatrix& a) {
  LogDeterminant det;
  const std::size_t n = a.dim();
  if (n == 0) return det;
  require_sound_lapack();
  const std::size_t kl = a.half_band();
  const std::size_t ku = kl;
  const std::size_t ldab = 2 * kl + ku + 1;
  std::vector<double> ab(ldab * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t lo = j > ku ? j - ku : 0;
    const std::size_t hi = std::min(n - 1, j + kl);
    for (std::size_t i = lo; i <= hi; ++i) {
      const double v = (i == j ? 1.0 : 0.0) - a(i, j);
      ab[(kl + ku + i - j) + j * ldab] = v;
    }
  }
  std::vector<lapack_int> ipiv(n);
  const auto nn = static_cast<lapack_int>(n);
  const lapack_int info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, nn, nn, static_cast<lapack_int>(kl),
                                         static_cast<lapack_int>(ku), ab.data(),
                                         static_cast<lapack_int>(ldab), ipiv.data());
  if (info < 0) throw NumericalQualityError("banded LU: invalid argument " + std::to_string(info));
  for (std::size_t j = 0; j < n; ++j) {
    accumulate(det, ab[(kl + ku) + j * ldab], ipiv[j] != static_cast<lapack_int>(j + 1));
  }
  return det;
}

}  // namespace ginibre_edge::linalg
