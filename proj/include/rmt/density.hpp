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

#include <span>
#include <vector>

namespace rmt {

/// Projection axis of a complex eigenvalue cloud: real (X) or imaginary (Y).
enum class Axis { X, Y };

/// A density sampled on a strictly increasing grid, plus an optional atom at
/// the origin. ys are densities per unit x; the total probability of a
/// normalized curve is integral() + point_mass_at_zero.
struct DensityCurve {
  std::vector<double> xs;
  std::vector<double> ys;
  double point_mass_at_zero = 0.0;

  std::size_t size() const noexcept { return xs.size(); }

  /// Trapezoid integral of ys over xs (continuous part only).
  double integral() const;
  double total_mass() const { return integral() + point_mass_at_zero; }

  /// Piecewise-linear interpolation, zero outside [xs.front(), xs.back()].
  double at(double x) const;

  /// Throws InvalidConfig when xs is not strictly increasing, sizes differ,
  /// or a value is non-finite / negative.
  void validate() const;
};

/// n uniformly spaced points on [lo, hi] (inclusive).
std::vector<double> linspace(double lo, double hi, std::size_t n);

double trapezoid(std::span<const double> xs, std::span<const double> ys);

DensityCurve resample(const DensityCurve& curve, std::span<const double> grid);

}  // namespace rmt
