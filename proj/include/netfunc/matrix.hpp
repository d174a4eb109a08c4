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

#ifndef NETFUNC__MATRIX_HPP_
#define NETFUNC__MATRIX_HPP_

#include <vector>

namespace netfunc
{

/// Dense real matrix, row-major storage, 0-based indices.
class Matrix
{
public:
  Matrix() = default;

  Matrix(int rows, int cols, double fill = 0.0)
  : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill)
  {
  }

  static Matrix identity(int n)
  {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = 1.0;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double & operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<double> & data() const { return data_; }

  double trace() const;
  /// max_i sum_j |a_ij|
  double inf_norm() const;
  double max_abs() const;

  bool operator==(const Matrix & other) const = default;

private:
  int rows_{0};
  int cols_{0};
  std::vector<double> data_;
};

Matrix operator+(const Matrix & a, const Matrix & b);
Matrix operator-(const Matrix & a, const Matrix & b);
Matrix operator*(double s, const Matrix & a);

/// Serial reference kernel.  Kept next to the OpenMP variant so tests can
/// assert the two agree bit for bit.
Matrix matmul_serial(const Matrix & a, const Matrix & b);

/// OpenMP kernel.  Parallelizes over output rows only, so every element is
/// accumulated in the same order as in matmul_serial and the results are
/// bitwise identical regardless of thread count.
Matrix matmul(const Matrix & a, const Matrix & b);

std::vector<double> matvec(const Matrix & a, const std::vector<double> & x);

}  // namespace netfunc

#endif  // NETFUNC__MATRIX_HPP_
