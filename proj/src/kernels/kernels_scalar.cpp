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

#include <cmath>

#include "rmt/kernels.hpp"

namespace rmt::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double centered_sumsq_scalar(const double* a, std::size_t n, double mean) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - mean;
    acc += d * d;
  }
  return acc;
}

void affine_inplace_scalar(double* a, std::size_t n, double shift, double scale) {
  for (std::size_t i = 0; i < n; ++i) a[i] = (a[i] - shift) * scale;
}

double gaussian_kernel_sum_scalar(const double* centers, std::size_t n, double x, double inv_h) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (x - centers[i]) * inv_h;
    acc += std::exp(-0.5 * u * u);
  }
  return acc;
}

double epanechnikov_kernel_sum_scalar(const double* centers, std::size_t n, double x,
                                      double inv_h) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (x - centers[i]) * inv_h;
    const double w = 1.0 - u * u;
    if (w > 0.0) acc += w;
  }
  return acc;
}

constexpr KernelTable kScalar{
    Isa::Scalar,
    dot_scalar,
    sum_scalar,
    centered_sumsq_scalar,
    affine_inplace_scalar,
    gaussian_kernel_sum_scalar,
    epanechnikov_kernel_sum_scalar,
};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace rmt::kernels
