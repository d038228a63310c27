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

// Every SIMD kernel is checked against the scalar reference on the same
// inputs, across lengths that exercise the vector body and all tail sizes.

#include <cmath>
#include <vector>

#include "doctest.h"
#include "rmt/kernels.hpp"
#include "rmt/rng.hpp"

using namespace rmt;
using namespace rmt::kernels;

namespace {

std::vector<double> noise(std::size_t n, std::uint64_t seed, double scale = 1.0) {
  CounterRng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = scale * rng.next_normal();
  return v;
}

bool close(double a, double b, double rel, double abs_floor) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_floor;
}

const std::vector<std::size_t> kLengths{0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 67, 255, 1000, 4099};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar table is always present") {
  CHECK(table_for(Isa::Scalar) == &scalar_table());
  CHECK(scalar_table().isa == Isa::Scalar);
  const auto isas = available_isas();
  CHECK(isas.front() == Isa::Scalar);
  CHECK(isa_name(active().isa).size() > 0);
  MESSAGE("active kernel set: " << isa_name(active().isa));
}

TEST_CASE("scalar reference values") {
  const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
  const auto& s = scalar_table();
  CHECK(s.dot(a.data(), b.data(), 3) == 32.0);
  CHECK(s.sum(a.data(), 3) == 6.0);
  CHECK(s.centered_sumsq(a.data(), 3, 2.0) == 2.0);
  std::vector<double> c = a;
  s.affine_inplace(c.data(), 3, 1.0, 2.0);
  CHECK(c == std::vector<double>{0, 2, 4});
  CHECK(s.gaussian_kernel_sum(a.data(), 3, 2.0, 1.0) == doctest::Approx(1.0 + 2.0 * std::exp(-0.5)));
  CHECK(s.epanechnikov_kernel_sum(a.data(), 3, 2.0, 0.5) == doctest::Approx(1.0 + 2.0 * 0.75));
}

TEST_CASE("SIMD kernels match the scalar reference") {
  const auto& ref = scalar_table();
  for (Isa isa : available_isas()) {
    if (isa == Isa::Scalar) continue;
    const KernelTable* simd = table_for(isa);
    REQUIRE(simd != nullptr);
    CAPTURE(isa_name(isa));
    for (std::size_t n : kLengths) {
      CAPTURE(n);
      const auto a = noise(n, 10 + n);
      const auto b = noise(n, 20 + n);
      CHECK(close(simd->dot(a.data(), b.data(), n), ref.dot(a.data(), b.data(), n), 1e-12, 1e-12 * n));
      CHECK(close(simd->sum(a.data(), n), ref.sum(a.data(), n), 1e-12, 1e-12 * n));
      CHECK(close(simd->centered_sumsq(a.data(), n, 0.3), ref.centered_sumsq(a.data(), n, 0.3), 1e-12, 0.0));

      std::vector<double> x = a, y = a;
      simd->affine_inplace(x.data(), n, 0.7, -1.3);
      ref.affine_inplace(y.data(), n, 0.7, -1.3);
      CHECK(x == y);

      for (double at : {-3.0, 0.0, 0.4, 2.5, 40.0}) {
        for (double inv_h : {0.1, 1.0, 7.5, 1e4}) {
          CHECK(close(simd->gaussian_kernel_sum(a.data(), n, at, inv_h), ref.gaussian_kernel_sum(a.data(), n, at, inv_h),
                      1e-13, 1e-300));
          CHECK(close(simd->epanechnikov_kernel_sum(a.data(), n, at, inv_h),
                      ref.epanechnikov_kernel_sum(a.data(), n, at, inv_h), 1e-13, 1e-14));
        }
      }
    }
  }
}

TEST_CASE("SIMD exponential across the whole negative range") {
  const KernelTable* simd = table_for(Isa::Avx2);
  if (simd == nullptr) return;
  const auto& ref = scalar_table();
  // One centre at 0 turns the kernel sum into exp(-0.5 (x inv_h)^2).
  const double zero = 0.0;
  double worst = 0.0;
  for (double u = 0.0; u < 40.0; u += 0.01) {
    const double got = simd->gaussian_kernel_sum(&zero, 1, u, 1.0);
    const double want = ref.gaussian_kernel_sum(&zero, 1, u, 1.0);
    if (want > 0.0) worst = std::max(worst, std::abs(got - want) / want);
    else CHECK(got == 0.0);
  }
  CHECK(worst < 1e-14);
}

}  // TEST_SUITE
