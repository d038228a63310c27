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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "rmt/linalg.hpp"

// Seeded synthetic sources. Every generator is a pure function of its spec:
// randomness comes from CounterRng (rng.hpp) on sub-streams
// derive_seed(seed, id) with the fixed ids below.
//
//   stream id            use
//   0                    wgn samples
//   1                    narrowband BPSK symbols
//   2                    receiver noise added by the CLI generator
//   kFrameStreamBase + k NC-OFDM frame k subcarrier signs
//   (add_awgn uses its own seed argument directly)

namespace rmt {

inline constexpr std::uint64_t kWgnStream = 0;
inline constexpr std::uint64_t kNarrowbandStream = 1;
inline constexpr std::uint64_t kNoiseStream = 2;
inline constexpr std::uint64_t kFrameStreamBase = 0x1000;

struct WgnParams {
  double variance = 1.0;
};

/// Normalized frequencies in cycles/sample. Defaults are the down-converted
/// equivalent of a 500 MHz wide waveform sampled at 3 GS/s (band 1/6),
/// centred at a quarter of the sample rate.
struct NarrowbandParams {
  double carrier_norm = 0.25;
  double band_norm = 1.0 / 6.0;
  double symbol_rate_norm = 1.0 / 24.0;
};

struct NcOfdmParams {
  std::size_t n_fft = 1024;
  std::vector<std::size_t> occupied;  // sorted, unique, < n_fft; BPSK on each
};

struct SignalSpec {
  std::uint64_t seed = 0;
  std::size_t length = 0;  // samples (wgn, narrowband)
  std::variant<WgnParams, NarrowbandParams, NcOfdmParams> params;
};

/// Real (time-domain wgn / narrowband) or complex (NC-OFDM) samples at a
/// normalized sample rate of 1.
struct SampleStream {
  std::variant<std::vector<double>, std::vector<std::complex<double>>> samples;

  bool is_complex() const noexcept { return samples.index() == 1; }
  std::size_t size() const noexcept;
  const std::vector<double>& real() const { return std::get<0>(samples); }
  const std::vector<std::complex<double>>& complex() const { return std::get<1>(samples); }
  /// Mean of |s|^2.
  double mean_power() const;
};

/// Occupied tones [10:50, 80:100, 140:200, 300:400, 600:700, 800:900]
/// (inclusive ranges, 426 of 1024).
std::vector<std::size_t> reference_occupied_tones();

SampleStream gen_wgn(const SignalSpec& spec);

/// BPSK (+-1) symbols with rectangular pulses of 1/symbol_rate_norm samples,
/// times cos(2 pi carrier_norm t). Throws AliasingConfig when the band leaves
/// (0, 0.5) and InvalidConfig for non-positive rates.
SampleStream gen_narrowband(const SignalSpec& spec);

/// n_frames concatenated inverse-DFT frames of length n_fft, no cyclic prefix.
/// Frame k draws its signs from derive_seed(seed, kFrameStreamBase + k).
/// Throws EmptyOccupiedSet.
SampleStream gen_ncofdm_frames(const SignalSpec& spec, std::size_t n_frames);

enum class Direction { Forward, Inverse };

/// Unitary radix-2 DFT (both directions scaled by 1/sqrt(n)). Forward uses
/// exp(-2 pi i jk/n). Throws NonPowerOfTwoLength.
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> frame, Direction direction);

/// Per-frame forward DFT of consecutive n_fft blocks; a trailing partial block
/// is dropped. Real streams are promoted to complex.
SampleStream to_frequency_domain(const SampleStream& stream, std::size_t n_fft);

/// Marks "no noise" for add_awgn.
inline constexpr double kNoNoise = std::numeric_limits<double>::infinity();

/// Adds seeded Gaussian noise of variance mean_power / 10^(snr_db / 10).
/// Complex streams get circular noise (half the variance per component).
/// snr_db = +inf returns the input unchanged. Throws EmptyInput.
SampleStream add_awgn(const SampleStream& stream, double snr_db, std::uint64_t seed);

/// Row-major framing: row i holds samples [i n, (i + 1) n). A complex stream
/// yields 2p real rows, real parts first. Throws InsufficientSamples.
DataMatrix stream_to_matrix(const SampleStream& stream, std::size_t p, std::size_t n);

}  // namespace rmt
