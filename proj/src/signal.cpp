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

#include "rmt/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rmt/error.hpp"
#include "rmt/rng.hpp"

namespace rmt {
namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void append_range(std::vector<std::size_t>& out, std::size_t first, std::size_t last) {
  for (std::size_t k = first; k <= last; ++k) out.push_back(k);
}

}  // namespace

std::size_t SampleStream::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, samples);
}

double SampleStream::mean_power() const {
  double acc = 0.0;
  std::size_t n = 0;
  std::visit(
      [&](const auto& v) {
        for (const auto& s : v) acc += std::norm(s);
        n = v.size();
      },
      samples);
  return n == 0 ? 0.0 : acc / static_cast<double>(n);
}

std::vector<std::size_t> reference_occupied_tones() {
  std::vector<std::size_t> out;
  append_range(out, 10, 50);
  append_range(out, 80, 100);
  append_range(out, 140, 200);
  append_range(out, 300, 400);
  append_range(out, 600, 700);
  append_range(out, 800, 900);
  return out;
}

SampleStream gen_wgn(const SignalSpec& spec) {
  const auto& params = std::get<WgnParams>(spec.params);
  if (!(params.variance > 0.0)) throw Error(ErrorCode::InvalidConfig, "wgn variance must be positive");
  CounterRng rng(derive_seed(spec.seed, kWgnStream));
  const double scale = std::sqrt(params.variance);
  std::vector<double> out(spec.length);
  for (double& v : out) v = scale * rng.next_normal();
  return SampleStream{std::move(out)};
}

SampleStream gen_narrowband(const SignalSpec& spec) {
  const auto& params = std::get<NarrowbandParams>(spec.params);
  if (!(params.band_norm > 0.0) || !(params.symbol_rate_norm > 0.0) || params.symbol_rate_norm > 1.0)
    throw Error(ErrorCode::InvalidConfig, "narrowband band and symbol rate must be in (0, 1]");
  const double lo = params.carrier_norm - 0.5 * params.band_norm;
  const double hi = params.carrier_norm + 0.5 * params.band_norm;
  if (!(lo > 0.0) || !(hi < 0.5))
    throw Error(ErrorCode::AliasingConfig,
                "band [" + std::to_string(lo) + ", " + std::to_string(hi) + "] leaves (0, 0.5)");

  const CounterRng symbols(derive_seed(spec.seed, kNarrowbandStream));
  std::vector<double> out(spec.length);
  for (std::size_t t = 0; t < spec.length; ++t) {
    const auto k = static_cast<std::uint64_t>(
        std::floor(static_cast<double>(t) * params.symbol_rate_norm + 1e-9));
    const double sign = (symbols.at(k) >> 63) ? -1.0 : 1.0;
    out[t] = sign * std::cos(2.0 * std::numbers::pi * params.carrier_norm * static_cast<double>(t));
  }
  return SampleStream{std::move(out)};
}

SampleStream gen_ncofdm_frames(const SignalSpec& spec, std::size_t n_frames) {
  const auto& params = std::get<NcOfdmParams>(spec.params);
  if (params.occupied.empty()) throw Error(ErrorCode::EmptyOccupiedSet, "NC-OFDM needs occupied tones");
  if (!is_power_of_two(params.n_fft))
    throw Error(ErrorCode::NonPowerOfTwoLength, "n_fft = " + std::to_string(params.n_fft));
  for (std::size_t j = 0; j < params.occupied.size(); ++j) {
    if (params.occupied[j] >= params.n_fft || (j > 0 && params.occupied[j] <= params.occupied[j - 1]))
      throw Error(ErrorCode::InvalidConfig, "occupied tones must be sorted, unique and below n_fft");
  }

  std::vector<std::complex<double>> out;
  out.reserve(n_frames * params.n_fft);
  std::vector<std::complex<double>> bins(params.n_fft);
  for (std::size_t frame = 0; frame < n_frames; ++frame) {
    const CounterRng rng(derive_seed(spec.seed, kFrameStreamBase + frame));
    std::fill(bins.begin(), bins.end(), std::complex<double>(0.0));
    for (std::size_t j = 0; j < params.occupied.size(); ++j)
      bins[params.occupied[j]] = (rng.at(j) >> 63) ? -1.0 : 1.0;
    const auto time = dft(bins, Direction::Inverse);
    out.insert(out.end(), time.begin(), time.end());
  }
  return SampleStream{std::move(out)};
}

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> frame, Direction direction) {
  const std::size_t n = frame.size();
  if (!is_power_of_two(n)) throw Error(ErrorCode::NonPowerOfTwoLength, "length " + std::to_string(n));

  std::vector<std::complex<double>> a(frame.begin(), frame.end());
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double sign = direction == Direction::Forward ? -1.0 : 1.0;
  std::vector<std::complex<double>> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddle[k] = {std::cos(angle), std::sin(angle)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[start + k];
        const std::complex<double> v = a[start + k + len / 2] * twiddle[k * stride];
        a[start + k] = u + v;
        a[start + k + len / 2] = u - v;
      }
    }
  }

  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& v : a) v *= scale;
  return a;
}

SampleStream to_frequency_domain(const SampleStream& stream, std::size_t n_fft) {
  const std::size_t frames = n_fft == 0 ? 0 : stream.size() / n_fft;
  if (frames == 0)
    throw Error(ErrorCode::InsufficientSamples, "stream shorter than one DFT frame");
  std::vector<std::complex<double>> src;
  if (stream.is_complex()) {
    src = stream.complex();
  } else {
    src.assign(stream.real().begin(), stream.real().end());
  }
  std::vector<std::complex<double>> out;
  out.reserve(frames * n_fft);
  for (std::size_t f = 0; f < frames; ++f) {
    const auto spectrum = dft(std::span(src).subspan(f * n_fft, n_fft), Direction::Forward);
    out.insert(out.end(), spectrum.begin(), spectrum.end());
  }
  return SampleStream{std::move(out)};
}

SampleStream add_awgn(const SampleStream& stream, double snr_db, std::uint64_t seed) {
  if (stream.size() == 0) throw Error(ErrorCode::EmptyInput, "add_awgn on an empty stream");
  if (std::isinf(snr_db) && snr_db > 0.0) return stream;
  if (std::isnan(snr_db)) throw Error(ErrorCode::InvalidConfig, "snr_db is NaN");

  const double variance = stream.mean_power() / std::pow(10.0, snr_db / 10.0);
  CounterRng rng(seed);
  if (!stream.is_complex()) {
    std::vector<double> out = stream.real();
    const double s = std::sqrt(variance);
    for (double& v : out) v += s * rng.next_normal();
    return SampleStream{std::move(out)};
  }
  std::vector<std::complex<double>> out = stream.complex();
  const double s = std::sqrt(0.5 * variance);
  for (auto& v : out) {
    const double re = rng.next_normal();
    const double im = rng.next_normal();
    v += std::complex<double>(s * re, s * im);
  }
  return SampleStream{std::move(out)};
}

DataMatrix stream_to_matrix(const SampleStream& stream, std::size_t p, std::size_t n) {
  if (p == 0 || n == 0) throw Error(ErrorCode::DimensionMismatch, "matrix framing needs p, n >= 1");
  if (stream.size() < p * n)
    throw Error(ErrorCode::InsufficientSamples,
                "need " + std::to_string(p * n) + " samples, stream has " + std::to_string(stream.size()));
  if (stream.is_complex())
    return DataMatrix::from_complex(p, n, std::span(stream.complex()).first(p * n));
  RowMatrix m(p, n);
  std::copy_n(stream.real().begin(), p * n, m.data());
  return DataMatrix(std::move(m));
}

}  // namespace rmt
