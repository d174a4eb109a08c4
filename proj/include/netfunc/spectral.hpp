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

#ifndef NETFUNC__SPECTRAL_HPP_
#define NETFUNC__SPECTRAL_HPP_

#include <vector>

#include "netfunc/matrix.hpp"
#include "netfunc/poly.hpp"

namespace netfunc
{

/// det(sI + L) together with the matrix coefficients of adj(sI + L):
///
///   adj(sI + L) = sum_k q[k] * s^(N-1-k),  q[0] = I.
///
/// For a graph Laplacian L, entry (i, j) of q[k] is the total weight of the
/// k-arc spanning diverging forests whose tree rooted at j+1 contains i+1,
/// and char_poly coefficient i is the total weight of the (N-i)-arc forests.
struct ForestSeries
{
  Polynomial char_poly;
  std::vector<Matrix> q;
};

/// Faddeev-LeVerrier recurrence on -L.  The hot loop is the shared matmul
/// kernel; faddeev_leverrier_serial pins the serial kernel for tests and the
/// benchmark and returns bitwise identical output.
ForestSeries faddeev_leverrier(const Matrix & l);
ForestSeries faddeev_leverrier_serial(const Matrix & l);

/// Laplacian spectrum as the negated roots of det(sI + L), so the whole
/// library depends on a single eigenvalue path.  Enforces that at least one
/// eigenvalue is within tol of zero and none has real part below -tol.
ComplexMultiset laplacian_eigenvalues(const Matrix & l, double tol = 1e-7);

/// (L^m)_{oc} by repeated multiplication; o and c are 1-based node labels.
double laplacian_power_entry(const Matrix & l, int m, int o, int c);

/// Numerical rank: singular values above tol * sigma_max.
int matrix_rank(const Matrix & m, double tol = 1e-8);

}  // namespace netfunc

#endif  // NETFUNC__SPECTRAL_HPP_
