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
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rmt/density.hpp"
#include "rmt/linalg.hpp"

namespace rmt {

/// Eigenvalues with |lambda| < kZeroThreshold * max |lambda| are treated as
/// exact zeros (the rank-deficiency atom).
inline constexpr double kZeroThreshold = 1e-8;

/// Right-continuous empirical distribution F(x) = #{lambda <= x} / p.
class EsdFunction {
 public:
  /// Sorted copy of `values`; near-zero values (see kZeroThreshold) are
  /// snapped to exactly 0 so the atom lines up with theoretical CDFs.
  /// Throws EmptySpectrum.
  explicit EsdFunction(std::vector<double> values);
  explicit EsdFunction(const RealSpectrum& spec) : EsdFunction(spec.values) {}

  double operator()(double x) const;
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

double esd_eval(const RealSpectrum& spec, double x);

/// Values split into (entries with |v| >= kZeroThreshold * max|v|, fraction dropped).
std::pair<std::vector<double>, double> split_zero_atom(std::span<const double> values);
std::pair<std::vector<std::complex<double>>, double> split_zero_atom(
    std::span<const std::complex<double>> values);

enum class KernelType { Gaussian, Epanechnikov };

struct KernelConfig {
  KernelType kernel = KernelType::Gaussian;
  std::optional<double> bandwidth;  // empty: silverman_bandwidth of the nonzero eigenvalues
};

/// f(x) = (1 / (p h)) sum_i K((x - mu_i) / h) over the nonzero eigenvalues;
/// near-zero eigenvalues form point_mass_at_zero and the continuous part is
/// scaled by 1 - point_mass so the curve stays normalized.
DensityCurve kde_estimate(const RealSpectrum& spec, const KernelConfig& cfg,
                          std::span<const double> grid);

/// Kernel density estimate of a plain sample (no atom handling).
DensityCurve kde_of_samples(std::span<const double> samples, const KernelConfig& cfg,
                            std::span<const double> grid);

/// h = 0.9 min(sd, IQR / 1.34) m^(-1/5); IQR from linearly interpolated
/// quartiles. Falls back to sd when the IQR is 0. Throws DegenerateSample when
/// fewer than two distinct values are present.
double silverman_bandwidth(std::span<const double> samples);

/// Equal-width histogram scaled so that sum(height * width) = 1.
struct Histogram {
  std::vector<double> edges;    // bins + 1
  std::vector<double> heights;  // bins

  /// Bin centres and heights as a curve.
  DensityCurve as_curve() const;
  double area() const;
};

/// Range defaults to [min, max] of the samples (widened by 0.5 on each side
/// when they coincide); samples outside an explicit range are ignored.
/// Throws EmptyInput when no sample falls in range, InvalidConfig for bins == 0.
Histogram histogram_density(std::span<const double> samples, std::size_t bins,
                            std::optional<std::pair<double, double>> range = std::nullopt);

/// ceil(log2 m) + 1.
std::size_t sturges_bins(std::size_t sample_count);

/// sup |F_emp - F_theory| over the eigenvalues, on both sides of each step.
double ks_distance(const EsdFunction& esd, const std::function<double(double)>& cdf);

struct L1Result {
  double distance = 0.0;
  bool disjoint_supports = false;
};

/// Trapezoid integral of |a - b| after linear resampling of both curves onto
/// 2048 points spanning the union of their grids, plus |difference of atoms|.
/// When the grids do not overlap the result is the sum of both masses.
L1Result l1_distance(const DensityCurve& a, const DensityCurve& b);

/// sup |F_a - F_b| between the distribution functions of two density curves
/// (cumulative trapezoid plus atom at 0), checked at every grid point of both
/// curves and on both sides of the origin.
double cdf_ks_distance(const DensityCurve& a, const DensityCurve& b);

/// sqrt(2) Re(lambda) for axis X, sqrt(2) Im(lambda) for axis Y.
/// Throws EmptySpectrum.
std::vector<double> complex_projection_samples(const ComplexSpectrum& spec, Axis axis);

}  // namespace rmt
