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

// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after a runtime CPU check (see kernels_dispatch.cpp).

#include <immintrin.h>

#include <cmath>
#include <cstdint>

#include "rmt/kernels.hpp"

namespace rmt::kernels {
namespace detail {
const KernelTable& avx2_table() noexcept;
}

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// exp for non-positive arguments. Range reduction x = k ln2 + r with a
// two-constant ln2 split, |r| <= ln2/2, then a degree-13 Taylor polynomial
// (truncation error below 1e-17 relative). Arguments below -708 flush to 0.
inline __m256d exp_nonpositive(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d lower = _mm256_set1_pd(-708.0);

  const __m256d underflow = _mm256_cmp_pd(x, lower, _CMP_LT_OQ);
  x = _mm256_max_pd(x, lower);

  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  static constexpr double kInvFact[] = {
      1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
      1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
      1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        0.5,
      1.0,                1.0,
  };
  __m256d p = _mm256_set1_pd(kInvFact[0]);
  for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFact[i]));

  // 2^k via the exponent field; k >= -1022 here because x >= -708.
  const __m128i ki = _mm256_cvtpd_epi32(k);
  __m256i e = _mm256_cvtepi32_epi64(ki);
  e = _mm256_add_epi64(e, _mm256_set1_epi64x(1023));
  e = _mm256_slli_epi64(e, 52);
  const __m256d scale = _mm256_castsi256_pd(e);

  const __m256d result = _mm256_mul_pd(p, scale);
  return _mm256_andnot_pd(underflow, result);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_avx2(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

double centered_sumsq_avx2(const double* a, std::size_t n, double mean) {
  const __m256d m = _mm256_set1_pd(mean);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), m);
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = a[i] - mean;
    s += d * d;
  }
  return s;
}

void affine_inplace_avx2(double* a, std::size_t n, double shift, double scale) {
  const __m256d sh = _mm256_set1_pd(shift);
  const __m256d sc = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(a + i, _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i), sh), sc));
  for (; i < n; ++i) a[i] = (a[i] - shift) * scale;
}

double gaussian_kernel_sum_avx2(const double* centers, std::size_t n, double x, double inv_h) {
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d vih = _mm256_set1_pd(inv_h);
  const __m256d mhalf = _mm256_set1_pd(-0.5);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d u = _mm256_mul_pd(_mm256_sub_pd(vx, _mm256_loadu_pd(centers + i)), vih);
    acc = _mm256_add_pd(acc, exp_nonpositive(_mm256_mul_pd(mhalf, _mm256_mul_pd(u, u))));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double u = (x - centers[i]) * inv_h;
    s += std::exp(-0.5 * u * u);
  }
  return s;
}

double epanechnikov_kernel_sum_avx2(const double* centers, std::size_t n, double x,
                                    double inv_h) {
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d vih = _mm256_set1_pd(inv_h);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d u = _mm256_mul_pd(_mm256_sub_pd(vx, _mm256_loadu_pd(centers + i)), vih);
    acc = _mm256_add_pd(acc, _mm256_max_pd(zero, _mm256_fnmadd_pd(u, u, one)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double u = (x - centers[i]) * inv_h;
    const double w = 1.0 - u * u;
    if (w > 0.0) s += w;
  }
  return s;
}

constexpr KernelTable kAvx2{
    Isa::Avx2,
    dot_avx2,
    sum_avx2,
    centered_sumsq_avx2,
    affine_inplace_avx2,
    gaussian_kernel_sum_avx2,
    epanechnikov_kernel_sum_avx2,
};

}  // namespace

const KernelTable& detail::avx2_table() noexcept { return kAvx2; }

}  // namespace rmt::kernels
