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

#include "rmt/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "rmt/error.hpp"

namespace rmt {
namespace fs = std::filesystem;
namespace {

void put_u16(std::uint8_t* p, std::uint16_t v) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
}

void put_u32(std::uint8_t* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

std::uint16_t get_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

void put_f32(std::vector<std::uint8_t>& out, double v) {
  const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
}

float get_f32(const std::uint8_t* p) { return std::bit_cast<float>(get_u32(p)); }

std::vector<std::uint8_t> read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t checked_u32(std::size_t v, const char* what) {
  if (v == 0 || v > 0xFFFFFFFFu)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " out of range for the capture header");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const fs::path& path) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw Error(ErrorCode::BadCsv, "non-numeric cell '" + s + "' in " + path.string());
  return v;
}

}  // namespace

std::size_t CaptureHeader::element_size() const noexcept {
  switch (dtype) {
    case CaptureDType::F32Real: return 4;
    case CaptureDType::F32ComplexInterleaved: return 8;
    case CaptureDType::I16Real: return 2;
  }
  return 0;
}

std::array<std::uint8_t, kCaptureHeaderSize> encode_header(const CaptureHeader& h) {
  std::array<std::uint8_t, kCaptureHeaderSize> out{};
  std::memcpy(out.data(), "RMTC", 4);
  put_u16(out.data() + 4, h.version);
  put_u16(out.data() + 6, static_cast<std::uint16_t>(h.dtype));
  put_u32(out.data() + 8, h.rows);
  put_u32(out.data() + 12, h.cols);
  return out;
}

CaptureHeader decode_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kCaptureHeaderSize)
    throw Error(ErrorCode::TruncatedPayload, "capture shorter than its 32-byte header");
  if (std::memcmp(bytes.data(), "RMTC", 4) != 0) throw Error(ErrorCode::BadMagic, "expected 'RMTC'");
  CaptureHeader h;
  h.version = get_u16(bytes.data() + 4);
  if (h.version != kCaptureVersion)
    throw Error(ErrorCode::UnsupportedVersion, "capture version " + std::to_string(h.version));
  const std::uint16_t dtype = get_u16(bytes.data() + 6);
  if (dtype > 2) throw Error(ErrorCode::IoError, "unknown capture dtype " + std::to_string(dtype));
  h.dtype = static_cast<CaptureDType>(dtype);
  h.rows = get_u32(bytes.data() + 8);
  h.cols = get_u32(bytes.data() + 12);
  return h;
}

void write_capture(const fs::path& path, const DataMatrix& x) {
  CaptureHeader h;
  h.dtype = CaptureDType::F32Real;
  h.rows = checked_u32(x.rows(), "rows");
  h.cols = checked_u32(x.cols(), "cols");
  const auto header = encode_header(h);
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(kCaptureHeaderSize + h.payload_size());
  const double* data = x.entries().data();
  for (std::size_t i = 0; i < x.rows() * x.cols(); ++i) put_f32(bytes, data[i]);
  write_file_atomic(path, bytes);
}

void write_capture(const fs::path& path, std::span<const std::complex<double>> row_major,
                   std::size_t rows, std::size_t cols) {
  if (row_major.size() < rows * cols)
    throw Error(ErrorCode::InsufficientSamples, "complex capture needs rows * cols samples");
  CaptureHeader h;
  h.dtype = CaptureDType::F32ComplexInterleaved;
  h.rows = checked_u32(rows, "rows");
  h.cols = checked_u32(cols, "cols");
  const auto header = encode_header(h);
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  bytes.reserve(kCaptureHeaderSize + h.payload_size());
  for (std::size_t i = 0; i < rows * cols; ++i) {
    put_f32(bytes, row_major[i].real());
    put_f32(bytes, row_major[i].imag());
  }
  write_file_atomic(path, bytes);
}

CaptureHeader read_capture_header(const fs::path& path) { return decode_header(read_all(path)); }

DataMatrix read_capture(const fs::path& path) {
  const auto bytes = read_all(path);
  const CaptureHeader h = decode_header(bytes);
  if (h.rows == 0 || h.cols == 0) throw Error(ErrorCode::DimensionMismatch, "capture has an empty matrix");
  const std::size_t expected = kCaptureHeaderSize + h.payload_size();
  if (bytes.size() < expected)
    throw Error(ErrorCode::TruncatedPayload, "payload has " + std::to_string(bytes.size() - kCaptureHeaderSize) +
                                                 " bytes, header implies " + std::to_string(h.payload_size()));
  if (bytes.size() > expected) throw Error(ErrorCode::IoError, "trailing bytes after the capture payload");

  const std::uint8_t* p = bytes.data() + kCaptureHeaderSize;
  const std::size_t count = static_cast<std::size_t>(h.rows) * h.cols;
  switch (h.dtype) {
    case CaptureDType::F32Real: {
      RowMatrix m(h.rows, h.cols);
      for (std::size_t i = 0; i < count; ++i) m.data()[i] = get_f32(p + 4 * i);
      return DataMatrix(std::move(m));
    }
    case CaptureDType::I16Real: {
      RowMatrix m(h.rows, h.cols);
      for (std::size_t i = 0; i < count; ++i)
        m.data()[i] = static_cast<double>(static_cast<std::int16_t>(get_u16(p + 2 * i))) / 32768.0;
      return DataMatrix(std::move(m));
    }
    case CaptureDType::F32ComplexInterleaved: {
      std::vector<std::complex<double>> v(count);
      for (std::size_t i = 0; i < count; ++i) v[i] = {get_f32(p + 8 * i), get_f32(p + 8 * i + 4)};
      return DataMatrix::from_complex(h.rows, h.cols, v);
    }
  }
  throw Error(ErrorCode::IoError, "unreachable capture dtype");
}

std::string format_g9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_density_csv(const fs::path& path, std::span<const DensityCurve> curves,
                       std::span<const std::string> labels) {
  if (curves.empty() || curves.size() != labels.size())
    throw Error(ErrorCode::DimensionMismatch, "one label per density curve is required");
  for (const auto& c : curves) {
    c.validate();
    if (c.xs != curves.front().xs)
      throw Error(ErrorCode::DimensionMismatch, "density curves must share a grid; resample first");
  }

  std::string text;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    if (curves[k].point_mass_at_zero != 0.0)
      text += "# point_mass_" + labels[k] + "=" + format_g9(curves[k].point_mass_at_zero) + "\n";
  }
  text += "x";
  for (const auto& l : labels) text += "," + l;
  text += "\n";
  const auto& xs = curves.front().xs;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    text += format_g9(xs[i]);
    for (const auto& c : curves) text += "," + format_g9(c.ys[i]);
    text += "\n";
  }
  write_file_atomic(path, text);
}

const DensityCurve& DensityTable::get(const std::string& label) const {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return curves[k];
  throw Error(ErrorCode::BadCsv, "no column '" + label + "'");
}

DensityTable read_density_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  DensityTable table;
  std::vector<std::pair<std::string, double>> masses;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string prefix = "# point_mass_";
      const auto eq = line.find('=');
      if (line.rfind(prefix, 0) == 0 && eq != std::string::npos)
        masses.emplace_back(line.substr(prefix.size(), eq - prefix.size()),
                            parse_double(line.substr(eq + 1), path));
      continue;
    }
    const auto cells = split_commas(line);
    if (!have_header) {
      if (cells.size() < 2 || cells[0] != "x")
        throw Error(ErrorCode::BadCsv, "expected header 'x,<label>,...' in " + path.string());
      table.labels.assign(cells.begin() + 1, cells.end());
      table.curves.resize(table.labels.size());
      have_header = true;
      continue;
    }
    if (cells.size() != table.labels.size() + 1)
      throw Error(ErrorCode::BadCsv, "ragged row in " + path.string());
    const double x = parse_double(cells[0], path);
    for (std::size_t k = 0; k < table.labels.size(); ++k) {
      table.curves[k].xs.push_back(x);
      table.curves[k].ys.push_back(parse_double(cells[k + 1], path));
    }
  }
  if (!have_header) throw Error(ErrorCode::BadCsv, "no header in " + path.string());
  for (const auto& [label, mass] : masses) {
    for (std::size_t k = 0; k < table.labels.size(); ++k)
      if (table.labels[k] == label) table.curves[k].point_mass_at_zero = mass;
  }
  return table;
}

void write_cloud_csv(const fs::path& path, std::span<const std::complex<double>> values) {
  std::string text = "re,im\n";
  for (const auto& v : values) text += format_g9(v.real()) + "," + format_g9(v.imag()) + "\n";
  write_file_atomic(path, text);
}

void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename into " + path.string());
  }
}

void write_file_atomic(const fs::path& path, const std::string& text) {
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace rmt
