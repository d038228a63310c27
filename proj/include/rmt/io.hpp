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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rmt/density.hpp"
#include "rmt/linalg.hpp"

namespace rmt {

// ---------------------------------------------------------------------------
// .rmtc capture container, little-endian throughout:
//
//   offset  size  field
//   0       4     magic "RMTC"
//   4       2     version (1)
//   6       2     dtype (0 = f32 real, 1 = f32 complex interleaved re/im, 2 = i16 real)
//   8       4     rows
//   12      4     cols
//   16      16    reserved, zero
//   32      ...   row-major payload, rows * cols elements
//
// i16 samples are read as value / 32768. Complex payloads are read back as a
// 2 * rows x cols real matrix (real parts, then imaginary parts).

enum class CaptureDType : std::uint16_t { F32Real = 0, F32ComplexInterleaved = 1, I16Real = 2 };

inline constexpr std::size_t kCaptureHeaderSize = 32;
inline constexpr std::uint16_t kCaptureVersion = 1;

struct CaptureHeader {
  std::uint16_t version = kCaptureVersion;
  CaptureDType dtype = CaptureDType::F32Real;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;

  std::size_t element_size() const noexcept;
  std::size_t payload_size() const noexcept { return element_size() * rows * cols; }
};

std::array<std::uint8_t, kCaptureHeaderSize> encode_header(const CaptureHeader& h);
/// Throws BadMagic, UnsupportedVersion, or IoError (unknown dtype).
CaptureHeader decode_header(std::span<const std::uint8_t> bytes);

void write_capture(const std::filesystem::path& path, const DataMatrix& x);
void write_capture(const std::filesystem::path& path, std::span<const std::complex<double>> row_major,
                   std::size_t rows, std::size_t cols);

CaptureHeader read_capture_header(const std::filesystem::path& path);
/// Throws IoError, BadMagic, UnsupportedVersion, TruncatedPayload.
DataMatrix read_capture(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Density CSV: "# point_mass_<label>=<value>" comment lines for curves with an
// atom, a header "x,<label1>,<label2>,...", then one row per grid point.
// Numbers use 9 significant digits, '.' decimal, '\n' line ends.

void write_density_csv(const std::filesystem::path& path, std::span<const DensityCurve> curves,
                       std::span<const std::string> labels);

struct DensityTable {
  std::vector<std::string> labels;
  std::vector<DensityCurve> curves;

  /// Throws BadCsv when the label is missing.
  const DensityCurve& get(const std::string& label) const;
};

DensityTable read_density_csv(const std::filesystem::path& path);

/// "re,im" table of eigenvalues.
void write_cloud_csv(const std::filesystem::path& path, std::span<const std::complex<double>> values);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

/// printf("%.9g").
std::string format_g9(double v);

}  // namespace rmt
