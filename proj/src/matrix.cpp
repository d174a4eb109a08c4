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

#include "netfunc/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "netfunc/errors.hpp"

namespace netfunc
{

double Matrix::trace() const
{
  double t = 0.0;
  for (int i = 0; i < rows_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

double Matrix::inf_norm() const
{
  double norm = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double row = 0.0;
    for (int j = 0; j < cols_; ++j) {
      row += std::abs((*this)(i, j));
    }
    norm = std::max(norm, row);
  }
  return norm;
}

double Matrix::max_abs() const
{
  double m = 0.0;
  for (double v : data_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

namespace
{

void require_same_shape(const Matrix & a, const Matrix & b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::invalid_argument, "matrix shape mismatch");
  }
}

}  // namespace

Matrix operator+(const Matrix & a, const Matrix & b)
{
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      c(i, j) = a(i, j) + b(i, j);
    }
  }
  return c;
}

Matrix operator-(const Matrix & a, const Matrix & b)
{
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      c(i, j) = a(i, j) - b(i, j);
    }
  }
  return c;
}

Matrix operator*(double s, const Matrix & a)
{
  Matrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      c(i, j) = s * a(i, j);
    }
  }
  return c;
}

namespace
{

// i-k-j loop nest shared by both kernels: for a fixed output element the
// accumulation order over k is identical, which keeps serial and parallel
// results bitwise equal.
inline void matmul_row(const Matrix & a, const Matrix & b, Matrix & c, int i)
{
  const int n = a.cols();
  const int p = b.cols();
  for (int k = 0; k < n; ++k) {
    const double aik = a(i, k);
    if (aik == 0.0) {
      continue;
    }
    for (int j = 0; j < p; ++j) {
      c(i, j) += aik * b(k, j);
    }
  }
}

}  // namespace

Matrix matmul_serial(const Matrix & a, const Matrix & b)
{
  if (a.cols() != b.rows()) {
    throw Error(Errc::invalid_argument, "matmul shape mismatch");
  }
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    matmul_row(a, b, c, i);
  }
  return c;
}

Matrix matmul(const Matrix & a, const Matrix & b)
{
  if (a.cols() != b.rows()) {
    throw Error(Errc::invalid_argument, "matmul shape mismatch");
  }
  Matrix c(a.rows(), b.cols());
  const int m = a.rows();
#pragma omp parallel for schedule(static) if (m >= 64)
  for (int i = 0; i < m; ++i) {
    matmul_row(a, b, c, i);
  }
  return c;
}

std::vector<double> matvec(const Matrix & a, const std::vector<double> & x)
{
  if (static_cast<size_t>(a.cols()) != x.size()) {
    throw Error(Errc::invalid_argument, "matvec shape mismatch");
  }
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
      acc += a(i, j) * x[j];
    }
    y[i] = acc;
  }
  return y;
}

}  // namespace netfunc
