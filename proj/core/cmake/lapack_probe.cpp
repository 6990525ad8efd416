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


// Configure-time probe: exits 0 when the linked LAPACKE factorises correctly.

#include <lapacke.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <utility>
#include <vector>

namespace {

double reference_log_det(std::vector<long double> a, int n) {
  long double s = 0.0L;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::fabs(a[i * n + k]) > std::fabs(a[p * n + k])) p = i;
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
    }
    s += std::log(std::fabs(a[k * n + k]));
    for (int i = k + 1; i < n; ++i) {
      const long double f = a[i * n + k] / a[k * n + k];
      for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return static_cast<double>(s);
}

}  // namespace

int main() {
  const int n = 96;
  const int kl = 7;
  std::uint64_t state = 88172645463325252ull;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5;
  };
  std::vector<double> dense(n * n);
  std::vector<long double> wide(n * n);
  for (int i = 0; i < n * n; ++i) wide[i] = dense[i] = next();
  std::vector<lapack_int> ipiv(n);
  if (LAPACKE_dgetrf(LAPACK_ROW_MAJOR, n, n, dense.data(), n, ipiv.data()) != 0) return 1;
  double got = 0.0;
  for (int i = 0; i < n; ++i) got += std::log(std::fabs(dense[i * n + i]));
  const double want = reference_log_det(wide, n);
  if (!(std::fabs(got - want) < 1e-9)) {
    std::printf("dgetrf %.15g vs %.15g\n", got, want);
    return 1;
  }

  const int ldab = 3 * kl + 1;
  std::vector<double> ab(ldab * n, 0.0);
  std::vector<long double> band(n * n, 0.0L);
  for (int j = 0; j < n; ++j) {
    for (int i = (j > kl ? j - kl : 0); i < n && i <= j + kl; ++i) {
      const double v = next();
      ab[(2 * kl + i - j) + j * ldab] = v;
      band[i * n + j] = v;
    }
  }
  if (LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kl, kl, ab.data(), ldab, ipiv.data()) != 0) return 1;
  got = 0.0;
  for (int j = 0; j < n; ++j) got += std::log(std::fabs(ab[2 * kl + j * ldab]));
  const double want_band = reference_log_det(band, n);
  if (!(std::fabs(got - want_band) < 1e-9)) {
    std::printf("dgbtrf %.15g vs %.15g\n", got, want_band);
    return 1;
  }
  return 0;
}
