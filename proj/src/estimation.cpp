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

#include "rmt/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rmt/error.hpp"
#include "rmt/kernels.hpp"
#include "rmt/parallel.hpp"

namespace rmt {
namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Linearly interpolated quantile of sorted data (the "type 7" rule).
double quantile_sorted(std::span<const double> sorted, double prob) {
  const double pos = prob * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

EsdFunction::EsdFunction(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::EmptySpectrum, "empirical spectral distribution");
  const double threshold = kZeroThreshold * max_abs(values_);
  for (double& v : values_)
    if (std::abs(v) < threshold) v = 0.0;
  std::sort(values_.begin(), values_.end());
}

double EsdFunction::operator()(double x) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) / static_cast<double>(values_.size());
}

double esd_eval(const RealSpectrum& spec, double x) { return EsdFunction(spec)(x); }

std::pair<std::vector<double>, double> split_zero_atom(std::span<const double> values) {
  const double threshold = kZeroThreshold * max_abs(values);
  std::vector<double> kept;
  kept.reserve(values.size());
  for (double v : values)
    if (!(std::abs(v) < threshold)) kept.push_back(v);
  const double mass = values.empty() ? 0.0
                                     : static_cast<double>(values.size() - kept.size()) /
                                           static_cast<double>(values.size());
  return {std::move(kept), mass};
}

std::pair<std::vector<std::complex<double>>, double> split_zero_atom(
    std::span<const std::complex<double>> values) {
  double largest = 0.0;
  for (const auto& v : values) largest = std::max(largest, std::abs(v));
  const double threshold = kZeroThreshold * largest;
  std::vector<std::complex<double>> kept;
  kept.reserve(values.size());
  for (const auto& v : values)
    if (!(std::abs(v) < threshold)) kept.push_back(v);
  const double mass = values.empty() ? 0.0
                                     : static_cast<double>(values.size() - kept.size()) /
                                           static_cast<double>(values.size());
  return {std::move(kept), mass};
}

DensityCurve kde_of_samples(std::span<const double> samples, const KernelConfig& cfg,
                            std::span<const double> grid) {
  if (samples.empty()) throw Error(ErrorCode::EmptySpectrum, "kernel density estimate");
  const double h = cfg.bandwidth ? *cfg.bandwidth : silverman_bandwidth(samples);
  if (!(h > 0.0) || !std::isfinite(h))
    throw Error(ErrorCode::BandwidthNonPositive, "h = " + std::to_string(h));

  const auto& k = kernels::active();
  const double inv_h = 1.0 / h;
  const double m = static_cast<double>(samples.size());
  const double norm = cfg.kernel == KernelType::Gaussian
                          ? 1.0 / (m * h * std::sqrt(2.0 * std::numbers::pi))
                          : 0.75 / (m * h);

  DensityCurve out;
  out.xs.assign(grid.begin(), grid.end());
  out.ys.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const double s = cfg.kernel == KernelType::Gaussian
                         ? k.gaussian_kernel_sum(samples.data(), samples.size(), grid[i], inv_h)
                         : k.epanechnikov_kernel_sum(samples.data(), samples.size(), grid[i], inv_h);
    out.ys[i] = norm * s;
  });
  return out;
}

DensityCurve kde_estimate(const RealSpectrum& spec, const KernelConfig& cfg,
                          std::span<const double> grid) {
  if (spec.values.empty()) throw Error(ErrorCode::EmptySpectrum, "kernel density estimate");
  if (cfg.bandwidth && !(*cfg.bandwidth > 0.0))
    throw Error(ErrorCode::BandwidthNonPositive, "h = " + std::to_string(*cfg.bandwidth));
  auto [nonzero, atom] = split_zero_atom(spec.values);
  DensityCurve out = kde_of_samples(nonzero, cfg, grid);
  if (atom > 0.0) {
    for (double& y : out.ys) y *= 1.0 - atom;
    out.point_mass_at_zero = atom;
  }
  return out;
}

double silverman_bandwidth(std::span<const double> samples) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 2 || sorted.front() == sorted.back())
    throw Error(ErrorCode::DegenerateSample, "bandwidth needs at least two distinct samples");

  const double m = static_cast<double>(sorted.size());
  double mean = 0.0;
  for (double v : sorted) mean += v;
  mean /= m;
  double ss = 0.0;
  for (double v : sorted) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (m - 1.0));
  const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
  const double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
  return 0.9 * spread * std::pow(m, -0.2);
}

DensityCurve Histogram::as_curve() const {
  DensityCurve out;
  out.xs.resize(heights.size());
  for (std::size_t i = 0; i < heights.size(); ++i) out.xs[i] = 0.5 * (edges[i] + edges[i + 1]);
  out.ys = heights;
  return out;
}

double Histogram::area() const {
  double a = 0.0;
  for (std::size_t i = 0; i < heights.size(); ++i) a += heights[i] * (edges[i + 1] - edges[i]);
  return a;
}

Histogram histogram_density(std::span<const double> samples, std::size_t bins,
                            std::optional<std::pair<double, double>> range) {
  if (bins == 0) throw Error(ErrorCode::InvalidConfig, "histogram needs at least one bin");
  if (samples.empty()) throw Error(ErrorCode::EmptyInput, "histogram of an empty sample");
  double lo = 0.0;
  double hi = 0.0;
  if (range) {
    std::tie(lo, hi) = *range;
    if (!(hi > lo)) throw Error(ErrorCode::InvalidConfig, "histogram range must have hi > lo");
  } else {
    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    lo = *mn;
    hi = *mx;
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }

  Histogram out;
  out.edges = linspace(lo, hi, bins + 1);
  std::vector<std::size_t> counts(bins, 0);
  std::size_t in_range = 0;
  const double width = (hi - lo) / static_cast<double>(bins);
  for (double v : samples) {
    if (v < lo || v > hi) continue;
    auto b = static_cast<std::size_t>((v - lo) / width);
    if (b >= bins) b = bins - 1;
    ++counts[b];
    ++in_range;
  }
  if (in_range == 0) throw Error(ErrorCode::EmptyInput, "no samples inside the histogram range");
  out.heights.resize(bins);
  for (std::size_t b = 0; b < bins; ++b)
    out.heights[b] = static_cast<double>(counts[b]) /
                     (static_cast<double>(in_range) * (out.edges[b + 1] - out.edges[b]));
  return out;
}

std::size_t sturges_bins(std::size_t sample_count) {
  if (sample_count <= 1) return 1;
  return static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(sample_count)))) + 1;
}

double ks_distance(const EsdFunction& esd, const std::function<double(double)>& cdf) {
  const auto v = esd.values();
  const double p = static_cast<double>(v.size());
  double worst = 0.0;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;  // ties form one step
    // Left limits on both sides, so atoms in the theoretical CDF are handled.
    const double f_left = cdf(std::nextafter(v[i], -std::numeric_limits<double>::infinity()));
    const double f = cdf(v[i]);
    const double below = static_cast<double>(i) / p;
    const double above = static_cast<double>(j) / p;
    worst = std::max({worst, std::abs(below - f_left), std::abs(above - f)});
    i = j;
  }
  return std::min(worst, 1.0);
}

L1Result l1_distance(const DensityCurve& a, const DensityCurve& b) {
  a.validate();
  b.validate();
  L1Result out;
  const double atoms = std::abs(a.point_mass_at_zero - b.point_mass_at_zero);
  if (a.xs.back() < b.xs.front() || b.xs.back() < a.xs.front()) {
    out.disjoint_supports = true;
    out.distance = a.integral() + b.integral() + atoms;
    return out;
  }
  const auto grid = linspace(std::min(a.xs.front(), b.xs.front()),
                             std::max(a.xs.back(), b.xs.back()), 2048);
  std::vector<double> diff(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) diff[i] = std::abs(a.at(grid[i]) - b.at(grid[i]));
  out.distance = trapezoid(grid, diff) + atoms;
  return out;
}

namespace {

// Distribution function of a curve at sorted abscissas `at`.
std::vector<double> curve_cdf(const DensityCurve& c, std::span<const double> at, bool include_zero_atom) {
  std::vector<double> out(at.size());
  double acc = 0.0;  // integral of the curve up to c.xs[k]
  std::size_t k = 0;
  for (std::size_t i = 0; i < at.size(); ++i) {
    const double x = at[i];
    while (k + 1 < c.xs.size() && c.xs[k + 1] <= x) {
      acc += 0.5 * (c.ys[k] + c.ys[k + 1]) * (c.xs[k + 1] - c.xs[k]);
      ++k;
    }
    double value = 0.0;
    if (x >= c.xs.front()) {
      value = acc;
      if (k + 1 < c.xs.size() && x > c.xs[k]) {
        const double y = c.at(x);
        value += 0.5 * (c.ys[k] + y) * (x - c.xs[k]);
      }
    }
    const bool atom_counted = include_zero_atom ? x >= 0.0 : x > 0.0;
    if (atom_counted) value += c.point_mass_at_zero;
    out[i] = value;
  }
  return out;
}

}  // namespace

double cdf_ks_distance(const DensityCurve& a, const DensityCurve& b) {
  a.validate();
  b.validate();
  std::vector<double> at(a.xs);
  at.insert(at.end(), b.xs.begin(), b.xs.end());
  at.push_back(0.0);
  std::sort(at.begin(), at.end());
  at.erase(std::unique(at.begin(), at.end()), at.end());
  double worst = 0.0;
  for (bool with_atom : {true, false}) {
    const auto fa = curve_cdf(a, at, with_atom);
    const auto fb = curve_cdf(b, at, with_atom);
    for (std::size_t i = 0; i < at.size(); ++i) worst = std::max(worst, std::abs(fa[i] - fb[i]));
  }
  return std::min(worst, 1.0);
}

std::vector<double> complex_projection_samples(const ComplexSpectrum& spec, Axis axis) {
  if (spec.values.empty()) throw Error(ErrorCode::EmptySpectrum, "complex projection");
  std::vector<double> out;
  out.reserve(spec.values.size());
  for (const auto& v : spec.values)
    out.push_back(std::numbers::sqrt2 * (axis == Axis::X ? v.real() : v.imag()));
  return out;
}

}  // namespace rmt
