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

#include "rmt/theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rmt/error.hpp"

namespace rmt {
namespace {

void check_ratio(double c, const char* what) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw Error(ErrorCode::InvalidRatio, std::string(what) + " = " + std::to_string(c));
}

cdouble eval_derivative(const QuarticCoeffs& c, cdouble x) {
  return ((4.0 * c[0] * x + 3.0 * c[1]) * x + 2.0 * c[2]) * x + c[3];
}

constexpr double kAmbiguityRadius = 1e-6;
constexpr double kNegativeTolerance = 1e-9;

}  // namespace

MpParams mp_params(double c) {
  check_ratio(c, "c");
  const double s = std::sqrt(c);
  return MpParams{c, (1.0 - s) * (1.0 - s), (1.0 + s) * (1.0 + s), std::max(0.0, 1.0 - 1.0 / c)};
}

double mp_density(double x, double c) {
  const MpParams mp = mp_params(c);
  if (x < mp.a || x > mp.b || x <= 0.0) return 0.0;
  return std::sqrt((mp.b - x) * (x - mp.a)) / (2.0 * std::numbers::pi * c * x);
}

double mp_cdf(double x, double c) {
  const MpParams mp = mp_params(c);
  if (x < 0.0) return 0.0;
  if (x < mp.a) return mp.point_mass_at_zero;
  if (x >= mp.b) return 1.0;

  // x(t) = a + (b - a)(1 - cos t)/2 turns the square-root edges into a smooth
  // integrand: f(x) dx = ((b - a)/2)^2 sin^2 t / (2 pi c x(t)) dt.
  const double half = 0.5 * (mp.b - mp.a);
  const double upper = std::acos(std::clamp(1.0 - (x - mp.a) / half, -1.0, 1.0));
  auto integrand = [&](double t) {
    if (mp.a == 0.0) return half * (1.0 + std::cos(t)) / (2.0 * std::numbers::pi * c);
    const double xt = mp.a + half * (1.0 - std::cos(t));
    const double s = std::sin(t);
    return half * half * s * s / (2.0 * std::numbers::pi * c * xt);
  };
  const double cont =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, upper, 15, 1e-12);
  return std::min(1.0, mp.point_mass_at_zero + cont);
}

DensityCurve mp_density_curve(double c, std::size_t points) {
  const MpParams mp = mp_params(c);
  DensityCurve out;
  out.xs = linspace(mp.a, mp.b, std::max<std::size_t>(points, 2));
  out.ys.resize(out.xs.size());
  for (std::size_t i = 0; i < out.xs.size(); ++i) out.ys[i] = mp_density(out.xs[i], c);
  out.point_mass_at_zero = mp.point_mass_at_zero;
  return out;
}

QuarticCoeffs green_quartic_coeffs(cdouble z, double q) {
  check_ratio(q, "Q");
  if (z == cdouble(0.0))
    throw Error(ErrorCode::InvalidConfig, "Green's function quartic needs z != 0");
  const double a = 1.0 / q - 1.0;
  return {z * z / (q * q * q), -2.0 * a * z / (q * q), -(z * z - a * a) / q, 2.0 * a * z,
          cdouble(2.0 - 1.0 / q)};
}

cdouble eval_polynomial(const QuarticCoeffs& c, cdouble x) {
  return (((c[0] * x + c[1]) * x + c[2]) * x + c[3]) * x + c[4];
}

double backward_error(const QuarticCoeffs& c, cdouble r) {
  // Normwise: |P(r)| / (||c||_2 ||(r^4, r^3, ..., 1)||_2). Stays meaningful for
  // the very large roots near z = 0 and for exact zero roots (2 - 1/Q = 0).
  const double ar = std::abs(r);
  double coeff_sq = 0.0;
  double power_sq = 0.0;
  double power = 1.0;
  for (int k = 4; k >= 0; --k) {
    coeff_sq += std::norm(c[static_cast<std::size_t>(k)]);
    power_sq += power * power;
    power *= ar;
  }
  const double scale = std::sqrt(coeff_sq * power_sq);
  return scale > 0.0 ? std::abs(eval_polynomial(c, r)) / scale : 0.0;
}

double coefficient_residual(const QuarticCoeffs& c, cdouble r) {
  double norm2 = 0.0;
  for (const auto& ck : c) norm2 += std::norm(ck);
  return std::abs(eval_polynomial(c, r)) / std::sqrt(norm2);
}

std::array<cdouble, 4> solve_quartic(const QuarticCoeffs& c, double residual_tol) {
  double norm_inf = 0.0;
  for (const auto& ck : c) norm_inf = std::max(norm_inf, std::abs(ck));
  if (!(std::abs(c[0]) > 1e-14 * norm_inf))
    throw Error(ErrorCode::DegenerateLeadingCoefficient, "quartic leading coefficient is zero");

  Eigen::Matrix4cd companion = Eigen::Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) companion(0, k) = -c[static_cast<std::size_t>(k + 1)] / c[0];
  for (int k = 1; k < 4; ++k) companion(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(companion, false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NoConvergence, "companion-matrix eigenvalues did not converge");

  std::array<cdouble, 4> roots;
  for (int k = 0; k < 4; ++k) {
    cdouble r = es.eigenvalues()(k);
    for (int step = 0; step < 2; ++step) {
      const cdouble d = eval_derivative(c, r);
      if (d == cdouble(0.0)) break;
      const cdouble candidate = r - eval_polynomial(c, r) / d;
      if (std::abs(eval_polynomial(c, candidate)) <= std::abs(eval_polynomial(c, r))) r = candidate;
    }
    const double err = backward_error(c, r);
    if (!(err <= residual_tol))
      throw Error(ErrorCode::NoConvergence,
                  "quartic root backward error " + std::to_string(err) + " above tolerance");
    roots[static_cast<std::size_t>(k)] = r;
  }
  std::sort(roots.begin(), roots.end(), [](const cdouble& a, const cdouble& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

double lagged_point_mass(double q) { return std::max(0.0, 1.0 - q); }

cdouble green_function(cdouble z, double q, std::optional<cdouble> previous, double residual_tol) {
  check_ratio(q, "Q");
  if (!(z.imag() < 0.0))
    throw Error(ErrorCode::InvalidConfig, "green_function is evaluated below the real axis (Im z < 0)");

  const auto roots = solve_quartic(green_quartic_coeffs(z, q), residual_tol);
  const cdouble atom = lagged_point_mass(q) / z;
  const cdouble target = previous.value_or(1.0 / z);

  std::array<std::pair<double, cdouble>, 4> candidates;
  std::size_t count = 0;
  for (const cdouble& r : roots) {
    if ((r - atom).imag() >= -kNegativeTolerance) candidates[count++] = {std::abs(r - target), r};
  }
  if (count == 0)
    throw Error(ErrorCode::BranchAmbiguity,
                "no root with non-negative density at x = " + std::to_string(z.real()));
  std::sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  if (previous && count > 1 && std::abs(candidates[0].second - candidates[1].second) < kAmbiguityRadius &&
      candidates[1].first < kAmbiguityRadius)
    throw Error(ErrorCode::BranchAmbiguity,
                "two roots coincide near the tracked branch at x = " + std::to_string(z.real()) +
                    "; refine the grid");
  return candidates[0].second;
}

std::vector<double> default_lagged_grid(double q) {
  check_ratio(q, "Q");
  constexpr double kProbeEpsilon = 1e-9;
  const double m = lagged_point_mass(q);
  double half_width = 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    const cdouble z(half_width, -kProbeEpsilon);
    const cdouble g = green_function(z, q);
    if ((g - m / z).imag() / std::numbers::pi < 1e-6) break;
    half_width *= 1.25;
  }
  half_width *= 1.1;
  return linspace(-half_width, half_width, 2001);
}

LaggedDensity lagged_density_symmetric(const GreenSolveConfig& cfg) {
  check_ratio(cfg.q, "Q");
  if (!(cfg.epsilon > 0.0)) throw Error(ErrorCode::InvalidConfig, "epsilon must be positive");
  std::vector<double> grid = cfg.grid.empty() ? default_lagged_grid(cfg.q) : cfg.grid;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw Error(ErrorCode::InvalidConfig, "evaluation grid must be strictly increasing");

  const double m = lagged_point_mass(cfg.q);
  const std::size_t n = grid.size();
  LaggedDensity out;
  out.curve.xs = grid;
  out.curve.ys.assign(n, 0.0);
  out.curve.point_mass_at_zero = m;
  out.green.assign(n, cdouble(0.0));

  auto solve_at = [&](std::size_t i, std::optional<cdouble> previous) {
    const cdouble z(grid[i], -cfg.epsilon);
    const cdouble g = green_function(z, cfg.q, previous, cfg.residual_tol);
    const auto coeffs = green_quartic_coeffs(z, cfg.q);
    out.max_backward_error = std::max(out.max_backward_error, backward_error(coeffs, g));
    out.max_coefficient_residual = std::max(out.max_coefficient_residual, coefficient_residual(coeffs, g));
    double rho = (g - m / z).imag() / std::numbers::pi;
    if (rho < 0.0) {
      if (rho < -kNegativeTolerance)
        throw Error(ErrorCode::BranchAmbiguity,
                    "negative density " + std::to_string(rho) + " at x = " + std::to_string(grid[i]));
      out.max_clamped = std::max(out.max_clamped, -rho);
      rho = 0.0;
    }
    out.green[i] = g;
    out.curve.ys[i] = rho;
    return g;
  };

  // First index with x >= 0: the right pass covers [split, n), the left pass [0, split).
  const std::size_t split =
      static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), 0.0) - grid.begin());
  std::optional<cdouble> previous;
  for (std::size_t i = n; i-- > split;) previous = solve_at(i, previous);
  previous.reset();
  for (std::size_t i = 0; i < split; ++i) previous = solve_at(i, previous);
  return out;
}

DensityCurve project_density(const DensityCurve& rho_s, Axis /*axis*/) {
  const double total = rho_s.total_mass();
  if (total < 0.99 || total > 1.01)
    throw Error(ErrorCode::NotNormalized, "projected density has total mass " + std::to_string(total));
  // rho^A = rho^S, so both axes share the same rescaling.
  DensityCurve out;
  out.xs.resize(rho_s.xs.size());
  out.ys.resize(rho_s.ys.size());
  for (std::size_t i = 0; i < rho_s.xs.size(); ++i) {
    out.xs[i] = rho_s.xs[i] / std::numbers::sqrt2;
    out.ys[i] = rho_s.ys[i] * std::numbers::sqrt2;
  }
  out.point_mass_at_zero = rho_s.point_mass_at_zero;
  return out;
}

}  // namespace rmt
