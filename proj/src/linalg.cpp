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

#include "rmt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "rmt/error.hpp"
#include "rmt/kernels.hpp"
#include "rmt/parallel.hpp"

namespace rmt {
namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

bool is_symmetric(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

void check_lag(std::size_t t, std::ptrdiff_t tau) {
  if (tau < 0 || static_cast<std::size_t>(tau) >= t)
    throw Error(ErrorCode::LagOutOfRange,
                "tau = " + std::to_string(tau) + " with T = " + std::to_string(t));
}

}  // namespace

DataMatrix::DataMatrix(RowMatrix entries, bool standardized)
    : entries_(std::move(entries)), standardized_(standardized) {
  if (entries_.rows() < 1 || entries_.cols() < 1)
    throw Error(ErrorCode::DimensionMismatch, "data matrix must be at least 1 x 1");
  if (!entries_.allFinite()) throw Error(ErrorCode::NonFiniteEntry, "data matrix has NaN or Inf");
}

DataMatrix DataMatrix::from_complex(std::size_t p, std::size_t n,
                                    std::span<const std::complex<double>> row_major) {
  if (row_major.size() != p * n)
    throw Error(ErrorCode::DimensionMismatch, "complex block size does not match p x n");
  RowMatrix m(2 * p, n);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = row_major[i * n + j].real();
      m(p + i, j) = row_major[i * n + j].imag();
    }
  }
  return DataMatrix(std::move(m));
}

CovarianceMatrix CovarianceMatrix::from_matrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "covariance matrix must be square and non-empty");
  if (!is_symmetric(m, 1e-12)) throw Error(ErrorCode::NotSymmetric, "population matrix");
  CovarianceMatrix out;
  out.source_dims = {static_cast<std::size_t>(m.rows()), 0};
  out.entries = std::move(m);
  return out;
}

DataMatrix standardize_rows(const DataMatrix& x) {
  const auto& k = kernels::active();
  const std::size_t n = x.cols();
  RowMatrix out = x.entries();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double* row = out.data() + i * n;
    const double mean = k.sum(row, n) / static_cast<double>(n);
    const double var = n > 1 ? k.centered_sumsq(row, n, mean) / static_cast<double>(n - 1) : 0.0;
    if (!(var > 0.0)) throw Error(ErrorCode::ZeroVarianceRow, "row " + std::to_string(i));
    k.affine_inplace(row, n, mean, 1.0 / std::sqrt(var));
  }
  return DataMatrix(std::move(out), true);
}

CovarianceMatrix matrix_sqrt_psd(const CovarianceMatrix& t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(t.entries);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::ConvergenceFailure, "symmetric eigensolver (matrix square root)");
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const double norm = lambda.cwiseAbs().maxCoeff();
  if (lambda.minCoeff() < -1e-8 * norm)
    throw Error(ErrorCode::NotPSD, "min eigenvalue " + std::to_string(lambda.minCoeff()));
  const Eigen::VectorXd root = lambda.cwiseMax(0.0).cwiseSqrt();
  Matrix s = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
  CovarianceMatrix out;
  out.entries = 0.5 * (s + s.transpose());
  out.source_dims = t.source_dims;
  return out;
}

CovarianceMatrix sample_covariance(const DataMatrix& x,
                                   const std::optional<CovarianceMatrix>& population) {
  const std::size_t p = x.rows();
  const std::size_t n = x.cols();
  if (population && population->dim() != p)
    throw Error(ErrorCode::DimensionMismatch,
                "population matrix is " + std::to_string(population->dim()) + " x " +
                    std::to_string(population->dim()) + ", data has p = " + std::to_string(p));

  const auto& k = kernels::active();
  const double inv_n = 1.0 / static_cast<double>(n);
  Matrix gram(p, p);
  parallel_for(p, [&](std::size_t i) {
    const double* ri = x.entries().data() + i * n;
    for (std::size_t j = i; j < p; ++j) {
      const double* rj = x.entries().data() + j * n;
      const double v = k.dot(ri, rj, n) * inv_n;
      gram(i, j) = v;
      gram(j, i) = v;
    }
  });

  CovarianceMatrix out;
  out.source_dims = {p, n};
  if (!population) {
    out.entries = std::move(gram);
    return out;
  }
  const Matrix s = matrix_sqrt_psd(*population).entries;
  const Matrix shaped = s * gram * s;
  out.entries = 0.5 * (shaped + shaped.transpose());
  return out;
}

Matrix shift_matrix(std::size_t t, std::ptrdiff_t tau) {
  check_lag(t, tau);
  Matrix d = Matrix::Zero(t, t);
  for (std::size_t i = 0; i + static_cast<std::size_t>(tau) < t; ++i) d(i, i + tau) = 1.0;
  return d;
}

LaggedMatrix lagged_correlation(const DataMatrix& x, std::ptrdiff_t tau) {
  if (!x.standardized())
    throw Error(ErrorCode::NotStandardized, "lagged correlation needs standardized rows");
  return lagged_correlation_unchecked(x, tau);
}

LaggedMatrix lagged_correlation_unchecked(const DataMatrix& x, std::ptrdiff_t tau) {
  const std::size_t nrows = x.rows();
  const std::size_t t = x.cols();
  check_lag(t, tau);
  const std::size_t lag = static_cast<std::size_t>(tau);
  const std::size_t len = t - lag;

  const auto& k = kernels::active();
  const double inv_t = 1.0 / static_cast<double>(t);
  Matrix c(nrows, nrows);
  parallel_for(nrows, [&](std::size_t i) {
    const double* ri = x.entries().data() + i * t;
    for (std::size_t j = 0; j < nrows; ++j) {
      const double* rj = x.entries().data() + j * t + lag;
      c(i, j) = k.dot(ri, rj, len) * inv_t;
    }
  });

  LaggedMatrix out;
  out.entries = std::move(c);
  out.tau = lag;
  out.source_dims = {nrows, t};
  return out;
}

std::pair<Matrix, Matrix> split_symmetric(const Matrix& c) {
  if (c.rows() != c.cols()) throw Error(ErrorCode::DimensionMismatch, "split_symmetric needs a square matrix");
  const Matrix ct = c.transpose();
  return {0.5 * (c + ct), 0.5 * (c - ct)};
}

RealSpectrum eigvals_symmetric(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "eigvals_symmetric needs a non-empty square matrix");
  if (!is_symmetric(a, 1e-10)) throw Error(ErrorCode::NotSymmetric, "eigvals_symmetric input");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::ConvergenceFailure, "symmetric QR iteration did not converge");
  RealSpectrum out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.values.begin(), out.values.end());
  out.matrix_trace = a.trace();
  return out;
}

ComplexSpectrum eigvals_general(const Matrix& c) {
  if (c.rows() != c.cols() || c.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "eigvals_general needs a non-empty square matrix");
  Eigen::EigenSolver<Matrix> es(c, false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::ConvergenceFailure, "real Schur iteration did not converge");
  ComplexSpectrum out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  sort_complex(out.values);
  return out;
}

void sort_complex(std::vector<std::complex<double>>& values) {
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace rmt
