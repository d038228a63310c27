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

#include <cmath>

#include "doctest.h"
#include "rmt/error.hpp"
#include "rmt/linalg.hpp"
#include "support/oracles.hpp"

using namespace rmt;
using oracle::cd;

namespace {

DataMatrix data(const Eigen::MatrixXd& m) { return DataMatrix(RowMatrix(m)); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected rmt::Error");
  return ErrorCode::InvalidConfig;
}

std::vector<cd> as_complex(const std::vector<double>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("standardize_rows: two-point row") {
  RowMatrix m(1, 2);
  m << 1.0, 3.0;
  const DataMatrix s = standardize_rows(DataMatrix(m));
  CHECK(s.standardized());
  CHECK(s.entries()(0, 0) == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-14));
  CHECK(s.entries()(0, 1) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("standardize_rows: idempotent and moments of a Gaussian block") {
  const DataMatrix once = standardize_rows(data(oracle::gaussian_matrix(8, 64, 11)));
  for (std::size_t i = 0; i < once.rows(); ++i) {
    double mean = 0.0, var = 0.0;
    for (double v : once.row(i)) mean += v;
    mean /= 64.0;
    for (double v : once.row(i)) var += (v - mean) * (v - mean);
    var /= 63.0;
    CHECK(std::abs(mean) < 1e-10);
    CHECK(std::abs(var - 1.0) < 1e-8);
  }
  const DataMatrix twice = standardize_rows(once);
  CHECK((twice.entries() - once.entries()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("standardize_rows: constant row and n = 1 are rejected") {
  RowMatrix m(2, 3);
  m << 1, 2, 3, 5, 5, 5;
  CHECK(code_of([&] { standardize_rows(DataMatrix(m)); }) == ErrorCode::ZeroVarianceRow);
  CHECK(code_of([] { standardize_rows(DataMatrix(RowMatrix::Ones(3, 1))); }) == ErrorCode::ZeroVarianceRow);
}

TEST_CASE("DataMatrix rejects non-finite entries") {
  RowMatrix m = RowMatrix::Zero(2, 2);
  m(1, 1) = std::nan("");
  CHECK(code_of([&] { DataMatrix d(m); }) == ErrorCode::NonFiniteEntry);
}

TEST_CASE("matrix_sqrt_psd") {
  SUBCASE("identity") {
    const auto s = matrix_sqrt_psd(CovarianceMatrix::from_matrix(Matrix::Identity(4, 4)));
    CHECK((s.entries - Matrix::Identity(4, 4)).norm() < 1e-14);
  }
  SUBCASE("diagonal") {
    Matrix t = Matrix::Zero(2, 2);
    t(0, 0) = 4.0;
    t(1, 1) = 9.0;
    const auto s = matrix_sqrt_psd(CovarianceMatrix::from_matrix(t));
    CHECK(s.entries(0, 0) == doctest::Approx(2.0));
    CHECK(s.entries(1, 1) == doctest::Approx(3.0));
    CHECK(std::abs(s.entries(0, 1)) < 1e-14);
  }
  SUBCASE("random PSD squares back") {
    const Eigen::MatrixXd b = oracle::gaussian_matrix(5, 3, 21);
    const Matrix t = b * b.transpose();  // rank 3, PSD
    const auto s = matrix_sqrt_psd(CovarianceMatrix::from_matrix(t));
    CHECK((s.entries * s.entries - t).norm() / t.norm() < 1e-8);
    CHECK((s.entries - s.entries.transpose()).norm() < 1e-12);
  }
  SUBCASE("indefinite input") {
    Matrix t = Matrix::Identity(2, 2);
    t(1, 1) = -1.0;
    CHECK(code_of([&] { matrix_sqrt_psd(CovarianceMatrix::from_matrix(t)); }) == ErrorCode::NotPSD);
  }
}

TEST_CASE("sample_covariance") {
  SUBCASE("identity data") {
    const auto a = sample_covariance(DataMatrix(RowMatrix::Identity(2, 2)));
    CHECK((a.entries - 0.5 * Matrix::Identity(2, 2)).norm() < 1e-15);
  }
  SUBCASE("all-ones is rank one") {
    const auto a = sample_covariance(DataMatrix(RowMatrix::Ones(3, 5)));
    CHECK((a.entries - Matrix::Ones(3, 3)).norm() < 1e-14);
    const auto spec = eigvals_symmetric(a);
    CHECK(spec.values[2] == doctest::Approx(3.0));
    CHECK(std::abs(spec.values[0]) < 1e-12);
    CHECK(std::abs(spec.values[1]) < 1e-12);
  }
  SUBCASE("triple-loop oracle on 4x8") {
    const Eigen::MatrixXd x = oracle::gaussian_matrix(4, 8, 31);
    const auto a = sample_covariance(data(x));
    CHECK((a.entries - oracle::covariance_loops(x)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(a.source_dims == std::pair<std::size_t, std::size_t>{4, 8});
  }
  SUBCASE("population-shaped") {
    const Eigen::MatrixXd x = oracle::gaussian_matrix(3, 10, 41);
    Matrix t = Matrix::Zero(3, 3);
    t.diagonal() << 4.0, 1.0, 9.0;
    const auto a = sample_covariance(data(x), CovarianceMatrix::from_matrix(t));
    Matrix s = Matrix::Zero(3, 3);
    s.diagonal() << 2.0, 1.0, 3.0;
    CHECK((a.entries - s * oracle::covariance_loops(x) * s).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("dimension mismatch") {
    const auto t = CovarianceMatrix::from_matrix(Matrix::Identity(2, 2));
    CHECK(code_of([&] { sample_covariance(data(oracle::gaussian_matrix(3, 4, 1)), t); }) ==
          ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("shift_matrix") {
  CHECK(shift_matrix(4, 0) == Matrix::Identity(4, 4));
  const Matrix d1 = shift_matrix(3, 1);
  Matrix expect = Matrix::Zero(3, 3);
  expect(0, 1) = expect(1, 2) = 1.0;
  CHECK(d1 == expect);
  const Matrix d2 = shift_matrix(3, 2);
  CHECK(d2(0, 2) == 1.0);
  CHECK(d2.sum() == 1.0);
  CHECK(d2.rowwise().sum()(0) == 1.0);
  CHECK(code_of([] { shift_matrix(3, 3); }) == ErrorCode::LagOutOfRange);
  CHECK(code_of([] { shift_matrix(3, -1); }) == ErrorCode::LagOutOfRange);
}

TEST_CASE("lagged_correlation") {
  const DataMatrix x = standardize_rows(data(oracle::gaussian_matrix(5, 50, 51)));
  const Eigen::MatrixXd xm = x.entries();

  SUBCASE("tau = 0 is the sample covariance") {
    const auto c0 = lagged_correlation(x, 0);
    CHECK((c0.entries - oracle::covariance_loops(xm)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((c0.entries - sample_covariance(x).entries).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((c0.entries - c0.entries.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("ones row, tau = 1") {
    RowMatrix ones = RowMatrix::Ones(1, 10);
    const auto c = lagged_correlation_unchecked(DataMatrix(ones), 1);
    CHECK(c.entries(0, 0) == doctest::Approx(0.9).epsilon(1e-15));
  }
  SUBCASE("matches X D X^T built explicitly") {
    const auto c = lagged_correlation(x, 2);
    CHECK((c.entries - oracle::lagged_triple_loop(xm, 2)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(c.tau == 2);
  }
  SUBCASE("backward lag-sum form is the transpose") {
    // sum_t r^i_t r^j_{t - tau} pairs row i's later sample with row j's
    // earlier one, which is C^T under C = X D X^T / T with D = delta(t, t + tau).
    const auto c = lagged_correlation(x, 2);
    CHECK((c.entries.transpose() - oracle::lagged_sum_backward(xm, 2)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("preconditions") {
    CHECK(code_of([&] { lagged_correlation(data(xm), 1); }) == ErrorCode::NotStandardized);
    CHECK(code_of([&] { lagged_correlation(x, 50); }) == ErrorCode::LagOutOfRange);
    CHECK(code_of([&] { lagged_correlation(x, -1); }) == ErrorCode::LagOutOfRange);
  }
}

TEST_CASE("split_symmetric") {
  const Matrix c = oracle::gaussian_matrix(6, 6, 61);
  const auto [s, a] = split_symmetric(c);
  CHECK((s + a - c).norm() < 1e-14);
  CHECK((s - s.transpose()).norm() == 0.0);
  CHECK((a + a.transpose()).norm() == 0.0);
  for (const cd& v : eigvals_general(s).values) CHECK(std::abs(v.imag()) < 1e-10);
  for (const cd& v : eigvals_general(a).values) CHECK(std::abs(v.real()) < 1e-10);

  const Matrix sym = s;
  const auto [s2, a2] = split_symmetric(sym);
  CHECK(s2 == sym);
  CHECK(a2.norm() == 0.0);
}

TEST_CASE("eigvals_symmetric") {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 3, 1, 2;
  CHECK(eigvals_symmetric(d).values == std::vector<double>{1, 2, 3});
  const auto ones = eigvals_symmetric(Matrix::Ones(3, 3));
  CHECK(std::abs(ones.values[0]) < 1e-14);
  CHECK(std::abs(ones.values[1]) < 1e-14);
  CHECK(ones.values[2] == doctest::Approx(3.0));

  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = 1.0;
  CHECK(code_of([&] { eigvals_symmetric(bad); }) == ErrorCode::NotSymmetric);

  const Matrix g = oracle::gaussian_matrix(3, 3, 71);
  const Matrix sym = 0.5 * (g + g.transpose());
  CHECK(oracle::match_error(as_complex(eigvals_symmetric(sym).values), oracle::char_poly_roots(sym)) < 1e-8);
}

TEST_CASE("eigvals_general") {
  Matrix rot(2, 2);
  rot << 0, -1, 1, 0;
  const auto r = eigvals_general(rot).values;
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - cd(0, -1)) < 1e-14);
  CHECK(std::abs(r[1] - cd(0, 1)) < 1e-14);

  Matrix d = Matrix::Zero(2, 2);
  d.diagonal() << 5, 2;
  const auto dv = eigvals_general(d).values;
  CHECK(std::abs(dv[0] - 2.0) < 1e-14);
  CHECK(std::abs(dv[1] - 5.0) < 1e-14);

  const Matrix g = oracle::gaussian_matrix(3, 3, 81);
  CHECK(oracle::match_error(eigvals_general(g).values, oracle::char_poly_roots(g)) < 1e-8);
}

TEST_CASE("eigensolvers agree with characteristic polynomials on small matrices") {
  double worst_sym = 0.0, worst_gen = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 3;
    const Matrix g = oracle::gaussian_matrix(n, n, 1000 + seed);
    const Matrix sym = 0.5 * (g + g.transpose());
    worst_gen = std::max(worst_gen, oracle::match_error(eigvals_general(g).values, oracle::char_poly_roots(g)));
    worst_sym = std::max(worst_sym, oracle::match_error(as_complex(eigvals_symmetric(sym).values),
                                                        oracle::char_poly_roots(sym)));
  }
  CHECK(worst_sym < 1e-8);
  CHECK(worst_gen < 1e-8);
}

TEST_CASE("spectral invariants on random inputs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Matrix g = oracle::gaussian_matrix(n, n, 5000 + seed);
    const Matrix sym = g + g.transpose();
    const auto rs = eigvals_symmetric(sym);
    double sum = 0.0;
    for (double v : rs.values) sum += v;
    CHECK(std::abs(sum - sym.trace()) <= 1e-8 * std::max(1.0, std::abs(sym.trace())));
    CHECK(std::is_sorted(rs.values.begin(), rs.values.end()));

    // Conjugate closure: pairing the spectrum with its conjugate loses nothing.
    const auto cs = eigvals_general(g).values;
    std::vector<cd> conj;
    for (const cd& v : cs) conj.push_back(std::conj(v));
    CHECK(oracle::match_error(cs, conj) < 1e-8);
    cd total = 0.0;
    for (const cd& v : cs) total += v;
    CHECK(std::abs(total.real() - g.trace()) < 1e-8 * std::max(1.0, std::abs(g.trace())));
  }
}

}  // TEST_SUITE
