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

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "rmt/density.hpp"

namespace rmt {

using cdouble = std::complex<double>;

// ---------------------------------------------------------------------------
// Marcenko-Pastur law for ratio c = p / n (unit-variance entries).

struct MpParams {
  double c = 0.0;
  double a = 0.0;  // (1 - sqrt c)^2
  double b = 0.0;  // (1 + sqrt c)^2
  double point_mass_at_zero = 0.0;  // max(0, 1 - 1/c)
};

MpParams mp_params(double c);

/// Continuous part only: (2 pi c x)^-1 sqrt((b - x)(x - a)) on [a, b], else 0.
/// Returns 0 at x = 0 when a = 0 (c = 1), where the density is singular.
double mp_density(double x, double c);

/// Distribution function including the atom at zero. Quadrature error below 1e-9.
double mp_cdf(double x, double c);

/// mp_density sampled on `points` uniform abscissas over [a, b], with the atom.
DensityCurve mp_density_curve(double c, std::size_t points = 2001);

// ---------------------------------------------------------------------------
// Time-lagged correlation spectrum: the Green's function G(z) solves
//
//   z^2 G^4 / Q^3 - 2 (1/Q - 1) z G^3 / Q^2 - (z^2 - (1/Q - 1)^2) G^2 / Q
//       + 2 (1/Q - 1) z G + 2 - 1/Q = 0,           Q = T / N,
//
// and the symmetric-problem density is rho^S(x) = Im G(x - i eps) / pi.
// For Q < 1 rho^S has an atom of mass 1 - Q at the origin (zG -> 1 - Q).

using QuarticCoeffs = std::array<cdouble, 5>;  // descending degree

QuarticCoeffs green_quartic_coeffs(cdouble z, double q);

cdouble eval_polynomial(const QuarticCoeffs& c, cdouble x);

/// |P(r)| / (||c||_2 ||(r^4, ..., r, 1)||_2), the normwise backward error of a root.
double backward_error(const QuarticCoeffs& c, cdouble r);

/// |P(r)| / ||c||_2.
double coefficient_residual(const QuarticCoeffs& c, cdouble r);

/// Roots from the eigenvalues of the companion matrix, each refined by two
/// Newton steps, ordered by real then imaginary part. Throws
/// DegenerateLeadingCoefficient and NoConvergence (backward error above tol).
std::array<cdouble, 4> solve_quartic(const QuarticCoeffs& c, double residual_tol = 1e-9);

/// Atom of rho^S at the origin: max(0, 1 - Q).
double lagged_point_mass(double q);

/// The physical root at z (Im z < 0). Candidates are roots whose continuous
/// part Im(G - m/z) is non-negative (m = lagged_point_mass(q)); among them the
/// one nearest `previous`, or nearest 1/z when no previous value is given.
/// Throws BranchAmbiguity when two candidates lie within 1e-6 of each other
/// and of `previous`, or when no candidate is admissible.
cdouble green_function(cdouble z, double q, std::optional<cdouble> previous = std::nullopt,
                       double residual_tol = 1e-9);

struct GreenSolveConfig {
  double q = 1.0;
  double epsilon = 1e-3;
  std::vector<double> grid;  // empty: default_lagged_grid(q)
  double residual_tol = 1e-9;
};

/// 2001 points on [-L, L], L grown until the density at +-L (probed with a
/// vanishing offset) is below 1e-6, plus a 10% margin.
std::vector<double> default_lagged_grid(double q);

struct LaggedDensity {
  DensityCurve curve;             // continuous part; atom in point_mass_at_zero
  std::vector<cdouble> green;     // selected root per grid point
  double max_backward_error = 0.0;
  double max_coefficient_residual = 0.0;
  double max_clamped = 0.0;       // largest negative density set to 0
};

/// Evaluates rho^S on cfg.grid. The root is tracked from the grid ends
/// (largest |x| on each side of 0) inward. Densities in (-1e-9, 0) are clamped
/// to 0; anything more negative throws BranchAmbiguity.
LaggedDensity lagged_density_symmetric(const GreenSolveConfig& cfg);

/// Density of Re(lambda) (axis X) or Im(lambda) (axis Y) of the complex
/// cloud: x -> sqrt(2) rho^S(sqrt(2) x), with rho^A taken equal to rho^S.
/// The sqrt(2) ordinate factor keeps the result normalized. Throws
/// NotNormalized if the input total mass is outside [0.99, 1.01].
DensityCurve project_density(const DensityCurve& rho_s, Axis axis);

}  // namespace rmt
