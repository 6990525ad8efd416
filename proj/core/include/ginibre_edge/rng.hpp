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

#include <array>
#include <cmath>
#include <cstdint>

namespace ginibre_edge {

/// Philox4x32-10 counter-based generator. A (seed, stream) pair addresses an
/// independent sequence of 2^64 blocks, so parallel work can be keyed by
/// sample index instead of by thread.
class Philox4x32 {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        counter_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0, 0} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return 0xFFFFFFFFu; }

  result_type operator()() noexcept {
    if (index_ == kBuffered) refill();
    return buffer_[index_++];
  }

  /// Uniform double in (0, 1) with 53 random bits.
  double uniform() noexcept {
    const std::uint64_t hi = (*this)() >> 5;
    const std::uint64_t lo = (*this)() >> 6;
    return (static_cast<double>((hi << 26) | lo) + 0.5) * 0x1.0p-53;
  }

  /// Uniform double in (0, 1) with 32 random bits.
  double uniform32() noexcept { return (static_cast<double>((*this)()) + 0.5) * 0x1.0p-32; }

  /// Standard normal by the Marsaglia polar method on 32-bit uniforms.
  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u;
    double v;
    double s;
    do {
      u = 2.0 * uniform32() - 1.0;
      v = 2.0 * uniform32() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  /// The raw ten-round Philox bijection.
  static Block bijection(Block ctr, Key key) noexcept {
    std::uint32_t c0 = ctr[0], c1 = ctr[1], c2 = ctr[2], c3 = ctr[3];
    std::uint32_t k0 = key[0], k1 = key[1];
    for (int r = 0; r < 10; ++r) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(0xD2511F53u) * c0;
      const std::uint64_t p1 = static_cast<std::uint64_t>(0xCD9E8D57u) * c2;
      c0 = static_cast<std::uint32_t>(p1 >> 32) ^ c1 ^ k0;
      c2 = static_cast<std::uint32_t>(p0 >> 32) ^ c3 ^ k1;
      c1 = static_cast<std::uint32_t>(p1);
      c3 = static_cast<std::uint32_t>(p0);
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return {c0, c1, c2, c3};
  }

 private:
  static constexpr int kLanes = 4;
  static constexpr int kBuffered = 4 * kLanes;

  void refill() noexcept {
    std::uint32_t c0[kLanes], c1[kLanes], c2[kLanes], c3[kLanes];
    for (int l = 0; l < kLanes; ++l) {
      c0[l] = counter_[0];
      c1[l] = counter_[1];
      c2[l] = counter_[2];
      c3[l] = counter_[3];
      if (++counter_[2] == 0) ++counter_[3];
    }
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int r = 0; r < 10; ++r) {
      for (int l = 0; l < kLanes; ++l) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(0xD2511F53u) * c0[l];
        const std::uint64_t p1 = static_cast<std::uint64_t>(0xCD9E8D57u) * c2[l];
        c0[l] = static_cast<std::uint32_t>(p1 >> 32) ^ c1[l] ^ k0;
        c2[l] = static_cast<std::uint32_t>(p0 >> 32) ^ c3[l] ^ k1;
        c1[l] = static_cast<std::uint32_t>(p1);
        c3[l] = static_cast<std::uint32_t>(p0);
      }
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    for (int l = 0; l < kLanes; ++l) {
      buffer_[4 * l] = c0[l];
      buffer_[4 * l + 1] = c1[l];
      buffer_[4 * l + 2] = c2[l];
      buffer_[4 * l + 3] = c3[l];
    }
    index_ = 0;
  }

  Key key_;
  Block counter_;
  std::array<std::uint32_t, kBuffered> buffer_{};
  int index_ = kBuffered;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Mixes two words into a seed (splitmix64 finaliser).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace ginibre_edge
