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

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "doctest.h"
#include "rmt/error.hpp"
#include "rmt/io.hpp"
#include "support/oracles.hpp"
#include "support/tempdir.hpp"

using namespace rmt;
namespace fs = std::filesystem;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected rmt::Error");
  return ErrorCode::InvalidConfig;
}

std::vector<std::uint8_t> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("capture header layout") {
  CaptureHeader h;
  h.dtype = CaptureDType::F32ComplexInterleaved;
  h.rows = 0x01020304;
  h.cols = 7;
  const auto b = encode_header(h);
  CHECK(b.size() == 32);
  CHECK(std::string(b.begin(), b.begin() + 4) == "RMTC");
  CHECK(b[4] == 1);
  CHECK(b[5] == 0);
  CHECK(b[6] == 1);
  CHECK(b[8] == 0x04);
  CHECK(b[11] == 0x01);
  CHECK(b[12] == 7);
  for (std::size_t k = 16; k < 32; ++k) CHECK(b[k] == 0);
  const auto back = decode_header(b);
  CHECK(back.rows == h.rows);
  CHECK(back.cols == 7);
  CHECK(back.dtype == CaptureDType::F32ComplexInterleaved);
}

TEST_CASE("real capture round trip") {
  test::TempDir dir;
  RowMatrix m(2, 3);
  m << 1.5, -2.25, 3.0, 0.125, 1e-3, -7.0;
  const fs::path p = dir / "a.rmtc";
  write_capture(p, DataMatrix(m));
  CHECK(fs::file_size(p) == 56);
  const DataMatrix back = read_capture(p);
  CHECK(back.rows() == 2);
  CHECK(back.cols() == 3);
  for (Eigen::Index i = 0; i < m.size(); ++i)
    CHECK(back.entries().data()[i] == static_cast<double>(static_cast<float>(m.data()[i])));
  CHECK(read_capture_header(p).dtype == CaptureDType::F32Real);
}

TEST_CASE("complex capture interleaves re, im and reads back stacked") {
  test::TempDir dir;
  const std::vector<std::complex<double>> v{{1, -1}, {2, -2}, {3, -3}, {4, -4}};
  const fs::path p = dir / "c.rmtc";
  write_capture(p, v, 2, 2);
  const auto bytes = slurp(p);
  CHECK(bytes.size() == 32 + 4 * 2 * 4);
  float f[4];
  std::memcpy(f, bytes.data() + 32, sizeof f);
  CHECK(f[0] == 1.0f);
  CHECK(f[1] == -1.0f);
  CHECK(f[2] == 2.0f);
  CHECK(f[3] == -2.0f);
  const DataMatrix back = read_capture(p);
  CHECK(back.rows() == 4);
  CHECK(back.entries()(0, 1) == 2.0);
  CHECK(back.entries()(1, 0) == 3.0);
  CHECK(back.entries()(2, 0) == -1.0);
  CHECK(back.entries()(3, 1) == -4.0);
}

TEST_CASE("i16 captures scale by 1/32768") {
  test::TempDir dir;
  CaptureHeader h;
  h.dtype = CaptureDType::I16Real;
  h.rows = 1;
  h.cols = 3;
  const auto head = encode_header(h);
  std::vector<std::uint8_t> bytes(head.begin(), head.end());
  for (std::int16_t s : {std::int16_t(-32768), std::int16_t(16384), std::int16_t(1)}) {
    const auto u = static_cast<std::uint16_t>(s);
    bytes.push_back(static_cast<std::uint8_t>(u & 0xff));
    bytes.push_back(static_cast<std::uint8_t>(u >> 8));
  }
  spit(dir / "i.rmtc", bytes);
  const auto m = read_capture(dir / "i.rmtc");
  CHECK(m.entries()(0, 0) == -1.0);
  CHECK(m.entries()(0, 1) == 0.5);
  CHECK(m.entries()(0, 2) == 1.0 / 32768.0);
}

TEST_CASE("corrupt captures are distinguishable") {
  test::TempDir dir;
  const fs::path p = dir / "x.rmtc";
  write_capture(p, DataMatrix(RowMatrix::Ones(2, 2)));
  const auto good = slurp(p);

  auto bad = good;
  bad[0] = 'X';
  spit(p, bad);
  CHECK(code_of([&] { read_capture(p); }) == ErrorCode::BadMagic);

  bad = good;
  bad[4] = 2;
  spit(p, bad);
  CHECK(code_of([&] { read_capture(p); }) == ErrorCode::UnsupportedVersion);

  bad = good;
  bad.pop_back();
  spit(p, bad);
  CHECK(code_of([&] { read_capture(p); }) == ErrorCode::TruncatedPayload);

  bad.assign(good.begin(), good.begin() + 10);
  spit(p, bad);
  CHECK(code_of([&] { read_capture(p); }) == ErrorCode::TruncatedPayload);

  CHECK(code_of([&] { read_capture(dir / "missing.rmtc"); }) == ErrorCode::IoError);
}

TEST_CASE("density csv") {
  test::TempDir dir;
  DensityCurve a;
  a.xs = {1.0, 2.0, 3.0};
  a.ys = {0.1, 0.123456789123, 0.3};
  a.point_mass_at_zero = 0.75;
  DensityCurve b;
  b.xs = a.xs;
  b.ys = {1.0 / 3.0, 0.0, 2.5e-12};
  const std::vector<DensityCurve> curves{a, b};
  const std::vector<std::string> labels{"mp", "kde"};
  const fs::path p = dir / "d.csv";
  write_density_csv(p, curves, labels);

  const auto lines = lines_of(p);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "# point_mass_mp=0.75");
  CHECK(lines[1] == "x,mp,kde");
  CHECK(lines[3] == "2,0.123456789,0");

  const DensityTable t = read_density_csv(p);
  CHECK(t.labels == labels);
  CHECK(t.get("mp").point_mass_at_zero == 0.75);
  CHECK(t.get("kde").point_mass_at_zero == 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t.get("mp").ys[i] == doctest::Approx(a.ys[i]).epsilon(1e-9));
    CHECK(t.get("kde").ys[i] == std::stod(format_g9(b.ys[i])));
  }
  CHECK(code_of([&] { t.get("nope"); }) == ErrorCode::BadCsv);

  DensityCurve one;
  one.xs = {0.0, 1.0, 2.0};
  one.ys = {0.0, 1.0, 0.0};
  const std::vector<DensityCurve> single{one};
  const std::vector<std::string> single_label{"f"};
  write_density_csv(dir / "s.csv", single, single_label);
  CHECK(lines_of(dir / "s.csv").size() == 4);

  DensityCurve other = one;
  other.xs = {0.0, 1.0, 3.0};
  const std::vector<DensityCurve> mismatched{one, other};
  const std::vector<std::string> two{"f", "g"};
  CHECK(code_of([&] { write_density_csv(dir / "m.csv", mismatched, two); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("cloud csv and atomic writes") {
  test::TempDir dir;
  const std::vector<std::complex<double>> v{{1.0, -0.5}, {0.25, 0.0}};
  write_cloud_csv(dir / "cloud.csv", v);
  const auto lines = lines_of(dir / "cloud.csv");
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "re,im");
  CHECK(lines[1] == "1,-0.5");

  write_file_atomic(dir / "t.txt", std::string("first"));
  write_file_atomic(dir / "t.txt", std::string("second"));
  CHECK(lines_of(dir / "t.txt") == std::vector<std::string>{"second"});
  std::size_t count = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path())) ++count;
  CHECK(count == 2);  // no temporaries left behind
  CHECK(code_of([&] { write_file_atomic(dir / "no" / "such" / "dir.txt", std::string("x")); }) == ErrorCode::IoError);
}

TEST_CASE("format_g9") {
  CHECK(format_g9(0.1) == "0.1");
  CHECK(format_g9(1.0 / 3.0) == "0.333333333");
  CHECK(format_g9(-2.5e-12) == "-2.5e-12");
  CHECK(format_g9(123456789012.0) == "1.23456789e+11");
}

}  // TEST_SUITE
