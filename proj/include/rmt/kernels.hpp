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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// where the target supports it, an AVX2+FMA version selected at runtime.
// Results of the two agree to rounding (see tests/test_kernels.cpp); within one
// process the selection is fixed, so repeated runs are bit-identical.

namespace rmt::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // sum_i a[i]
  double (*sum)(const double* a, std::size_t n);
  // sum_i (a[i] - mean)^2
  double (*centered_sumsq)(const double* a, std::size_t n, double mean);
  // a[i] = (a[i] - shift) * scale
  void (*affine_inplace)(double* a, std::size_t n, double shift, double scale);
  // sum_i exp(-0.5 * ((x - centers[i]) * inv_h)^2)
  double (*gaussian_kernel_sum)(const double* centers, std::size_t n, double x, double inv_h);
  // sum_i max(0, 1 - ((x - centers[i]) * inv_h)^2)
  double (*epanechnikov_kernel_sum)(const double* centers, std::size_t n, double x, double inv_h);
};

const KernelTable& scalar_table() noexcept;

/// Table for the requested ISA, or nullptr when this build/CPU lacks it.
const KernelTable* table_for(Isa isa) noexcept;

/// Kernel table chosen once per process: the widest ISA the CPU supports,
/// unless RMT_SIMD=scalar is set in the environment.
const KernelTable& active() noexcept;

std::vector<Isa> available_isas();
std::string_view isa_name(Isa isa) noexcept;

}  // namespace rmt::kernels
