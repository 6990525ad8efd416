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

#include <cstddef>
#include <vector>

namespace ginibre_edge::linalg {

/// A determinant held as sign * exp(log_abs).
struct LogDeterminant {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
};

/// Row-major dense square matrix.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<double> data;

  explicit DenseMatrix(std::size_t n = 0) : dim(n), data(n * n, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * dim + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
};

/// Symmetric matrix with A(i, j) = 0 for |i - j| > half_band; stores the upper band.
class SymmetricBandMatrix {
 public:
  SymmetricBandMatrix() = default;
  SymmetricBandMatrix(std::size_t dim, std::size_t half_band);

  std::size_t dim() const { return dim_; }
  std::size_t half_band() const { return half_band_; }

  /// Element A(i, i + d), 0 <= d <= half_band.
  double& band(std::size_t i, std::size_t d) { return upper_[i * (half_band_ + 1) + d]; }
  double band(std::size_t i, std::size_t d) const { return upper_[i * (half_band_ + 1) + d]; }

  double operator()(std::size_t i, std::size_t j) const;

  /// Shrinks the stored band to the widest nonzero offset.
  void compact();
  /// Drops trailing rows/columns whose band is identically zero.
  void truncate(std::size_t new_dim);

 private:
  std::size_t dim_ = 0;
  std::size_t half_band_ = 0;
  std::vector<double> upper_;
};

/// det(A) by LU with partial pivoting.
LogDeterminant log_det(const DenseMatrix& a);
/// det(I - A) by banded LU with partial pivoting.
LogDeterminant log_det_identity_minus(const SymmetricBandMatrix& a);

}  // namespace ginibre_edge::linalg
