// rmt - random matrix spectra of signal-capture data
// Copyright (C) 2026 The rmt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

namespace rmt {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// Seed of an independent sub-stream. Generators use fixed stream ids
/// (see signal.hpp) so that e.g. NC-OFDM frame k always draws from
/// derive_seed(seed, k) regardless of how many frames are requested.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_id) noexcept {
  return mix64(seed ^ mix64(stream_id + kGoldenGamma));
}

/// Counter-based SplitMix64: the i-th output is mix64(seed + (i + 1) * gamma),
/// so any position of the stream can be computed directly.
///
/// Doubles are drawn as (u >> 11) * 2^-53; normals use the Box-Muller pair
/// (sqrt(-2 ln u1) cos(2 pi u2), sqrt(-2 ln u1) sin(2 pi u2)) with u1 = 1 - uniform,
/// consuming two counters per pair.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const noexcept {
    return mix64(seed_ + (counter + 1) * kGoldenGamma);
  }

  std::uint64_t next_u64() noexcept { return at(counter_++); }

  /// Uniform on [0, 1).
  double next_uniform() noexcept;
  double next_normal() noexcept;
  /// +1 or -1 with equal probability (top bit of the next output).
  double next_sign() noexcept { return (next_u64() >> 63) ? -1.0 : 1.0; }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rmt
