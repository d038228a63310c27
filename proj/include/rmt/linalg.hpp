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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace rmt {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Matrix = Eigen::MatrixXd;

/// p x n real observations: rows are dimensions/channels, columns are time
/// samples. Rows are contiguous in memory.
class DataMatrix {
 public:
  /// Throws DimensionMismatch on an empty matrix and NonFiniteEntry on NaN/Inf.
  explicit DataMatrix(RowMatrix entries, bool standardized = false);

  /// Stacks the real parts (rows 0..p-1) above the imaginary parts
  /// (rows p..2p-1) of a row-major p x n complex block.
  static DataMatrix from_complex(std::size_t p, std::size_t n,
                                 std::span<const std::complex<double>> row_major);

  std::size_t rows() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(entries_.cols()); }
  bool standardized() const noexcept { return standardized_; }

  const RowMatrix& entries() const noexcept { return entries_; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols(), cols()};
  }

  /// Marks the matrix as standardized without touching the data. Used by
  /// callers that have verified the rows themselves.
  void assume_standardized() noexcept { standardized_ = true; }

 private:
  RowMatrix entries_;
  bool standardized_;
};

/// Symmetric PSD p x p matrix; source_dims = (p, n) of the data it came from
/// when produced by sample_covariance, (p, 0) otherwise.
struct CovarianceMatrix {
  Matrix entries;
  std::pair<std::size_t, std::size_t> source_dims{0, 0};

  /// Wraps a user-supplied population matrix; throws NotSymmetric.
  static CovarianceMatrix from_matrix(Matrix m);
  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries.rows()); }
};

/// C_tau = (1/T) X D_tau X^T for an N x T standardized X.
struct LaggedMatrix {
  Matrix entries;
  std::size_t tau = 0;
  std::pair<std::size_t, std::size_t> source_dims{0, 0};
};

struct RealSpectrum {
  std::vector<double> values;  // ascending
  double matrix_trace = 0.0;
};

struct ComplexSpectrum {
  std::vector<std::complex<double>> values;  // by real part, then imaginary part
};

/// Rows shifted to mean 0 and scaled to unit sample variance (divisor n - 1).
/// Throws ZeroVarianceRow for a constant row (every row when n = 1).
DataMatrix standardize_rows(const DataMatrix& x);

/// Symmetric PSD square root via eigendecomposition. Throws NotPSD if an
/// eigenvalue is below -1e-8 * ||T||_2; smaller negative eigenvalues are
/// treated as zero.
CovarianceMatrix matrix_sqrt_psd(const CovarianceMatrix& t);

/// A = (1/n) S X X^T S with S = T^{1/2} (identity when T is omitted).
CovarianceMatrix sample_covariance(const DataMatrix& x,
                                   const std::optional<CovarianceMatrix>& population = std::nullopt);

/// T x T non-circular shift: D(t, t') = 1 iff t' = t + tau.
Matrix shift_matrix(std::size_t t, std::ptrdiff_t tau);

/// C_ij = (1/T) sum_t X_i(t) X_j(t + tau), t = 0 .. T - tau - 1.
/// Requires a standardized X; see lagged_correlation_unchecked otherwise.
LaggedMatrix lagged_correlation(const DataMatrix& x, std::ptrdiff_t tau);
LaggedMatrix lagged_correlation_unchecked(const DataMatrix& x, std::ptrdiff_t tau);

/// ((C + C^T) / 2, (C - C^T) / 2)
std::pair<Matrix, Matrix> split_symmetric(const Matrix& c);

RealSpectrum eigvals_symmetric(const Matrix& a);
inline RealSpectrum eigvals_symmetric(const CovarianceMatrix& a) { return eigvals_symmetric(a.entries); }

ComplexSpectrum eigvals_general(const Matrix& c);
inline ComplexSpectrum eigvals_general(const LaggedMatrix& c) { return eigvals_general(c.entries); }

/// Canonical ordering used for all reported complex spectra.
void sort_complex(std::vector<std::complex<double>>& values);

}  // namespace rmt
