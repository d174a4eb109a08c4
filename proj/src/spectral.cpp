// Copyright 2026 The netfunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netfunc/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <string>

#include "netfunc/errors.hpp"

namespace netfunc
{

namespace
{

using Kernel = Matrix (*)(const Matrix &, const Matrix &);

ForestSeries faddeev_leverrier_impl(const Matrix & l, Kernel mm)
{
  if (l.rows() != l.cols()) {
    throw Error(Errc::invalid_argument, "matrix must be square");
  }
  const int n = l.rows();
  ForestSeries fs;
  if (n == 0) {
    fs.char_poly = Polynomial{1.0};
    return fs;
  }

  const Matrix a = -1.0 * l;
  std::vector<double> g(n + 1, 0.0);
  g[n] = 1.0;

  Matrix m = Matrix::identity(n);
  fs.q.reserve(n);
  for (int k = 1; k <= n; ++k) {
    fs.q.push_back(m);
    const Matrix b = mm(a, m);
    g[n - k] = -b.trace() / k;
    if (k < n) {
      m = b + g[n - k] * Matrix::identity(n);
    }
  }
  fs.char_poly = Polynomial(std::move(g));
  return fs;
}

}  // namespace

ForestSeries faddeev_leverrier(const Matrix & l)
{
  return faddeev_leverrier_impl(l, &matmul);
}

ForestSeries faddeev_leverrier_serial(const Matrix & l)
{
  return faddeev_leverrier_impl(l, &matmul_serial);
}

ComplexMultiset laplacian_eigenvalues(const Matrix & l, double tol)
{
  const ForestSeries fs = faddeev_leverrier(l);
  ComplexMultiset eig = poly_roots(fs.char_poly);
  for (Complex & z : eig) {
    // Avoid -0.0 components so negated real roots print and compare cleanly.
    z = Complex(
      z.real() == 0.0 ? 0.0 : -z.real(), z.imag() == 0.0 ? 0.0 : -z.imag());
  }
  std::sort(eig.begin(), eig.end(), [](const Complex & a, const Complex & b) {
    return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
  });

  bool has_zero = false;
  for (const Complex & z : eig) {
    if (std::abs(z) <= tol) {
      has_zero = true;
    }
    if (z.real() < -tol) {
      throw Error(
        Errc::invalid_laplacian,
        "eigenvalue with negative real part " + std::to_string(z.real()));
    }
  }
  if (!has_zero) {
    throw Error(Errc::invalid_laplacian, "no eigenvalue at zero");
  }
  return eig;
}

double laplacian_power_entry(const Matrix & l, int m, int o, int c)
{
  if (l.rows() != l.cols()) {
    throw Error(Errc::invalid_argument, "matrix must be square");
  }
  const int n = l.rows();
  if (o < 1 || o > n || c < 1 || c > n) {
    throw Error(Errc::index_out_of_range, "node label out of range");
  }
  if (m < 0) {
    throw Error(Errc::invalid_argument, "power must be non-negative");
  }
  std::vector<double> v(n, 0.0);
  v[c - 1] = 1.0;
  for (int k = 0; k < m; ++k) {
    v = matvec(l, v);
  }
  return v[o - 1];
}

int matrix_rank(const Matrix & m, double tol)
{
  if (m.rows() == 0 || m.cols() == 0) {
    return 0;
  }
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      e(i, j) = m(i, j);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
  const auto & sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) {
    return 0;
  }
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol * sv[0]) {
      ++rank;
    }
  }
  return rank;
}

}  // namespace netfunc
