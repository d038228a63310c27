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

#include "rmt/density.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/error.hpp"

namespace rmt {

double DensityCurve::integral() const { return trapezoid(xs, ys); }

double DensityCurve::at(double x) const {
  if (xs.empty() || x < xs.front() || x > xs.back()) return 0.0;
  if (xs.size() == 1) return ys.front();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return ys.back();
  const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  const std::size_t lo = hi - 1;
  const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + w * (ys[hi] - ys[lo]);
}

void DensityCurve::validate() const {
  if (xs.size() != ys.size() || xs.empty())
    throw Error(ErrorCode::InvalidConfig, "density curve needs matching, non-empty xs/ys");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
      throw Error(ErrorCode::InvalidConfig, "density curve has non-finite values");
    if (ys[i] < 0.0) throw Error(ErrorCode::InvalidConfig, "density curve has negative ordinates");
    if (i > 0 && !(xs[i] > xs[i - 1]))
      throw Error(ErrorCode::InvalidConfig, "density grid must be strictly increasing");
  }
  if (point_mass_at_zero < 0.0 || point_mass_at_zero > 1.0)
    throw Error(ErrorCode::InvalidConfig, "point mass outside [0, 1]");
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

double trapezoid(std::span<const double> xs, std::span<const double> ys) {
  double acc = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) acc += 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
  return acc;
}

DensityCurve resample(const DensityCurve& curve, std::span<const double> grid) {
  DensityCurve out;
  out.xs.assign(grid.begin(), grid.end());
  out.ys.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.ys[i] = curve.at(grid[i]);
  out.point_mass_at_zero = curve.point_mass_at_zero;
  return out;
}

}  // namespace rmt
