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

#ifndef NETFUNC__VERIFY_HPP_
#define NETFUNC__VERIFY_HPP_

#include <string>
#include <vector>

#include "netfunc/graph.hpp"
#include "netfunc/matrix.hpp"
#include "netfunc/poly.hpp"

namespace netfunc
{

/// Numeric eigendecomposition L = V diag(eigenvalues) V^-1 (row-major storage)
/// with the condition number of V.  `accepted` is false above cond_limit, in
/// which case V_inv is not computed.
struct EigenDecomposition
{
  int n{0};
  std::vector<Complex> v;
  std::vector<Complex> v_inv;
  ComplexMultiset eigenvalues;
  double condition{0.0};
  bool accepted{false};
};

EigenDecomposition eigen_decompose(const Matrix & l, double cond_limit = 1e8);

struct SampleComparison
{
  Complex s;
  Complex candidate;
  Complex oracle;
  double rel_err{0.0};

  bool operator==(const SampleComparison & other) const = default;
};

struct ComparisonReport
{
  std::vector<SampleComparison> samples;
  double max_err{0.0};
  double tolerance{0.0};
  bool pass{false};
  unsigned seed{0};
  std::string status{"ok"};

  bool operator==(const ComparisonReport & other) const = default;
};

/// Closed-loop network transfer function evaluated point-wise from the
/// resolvent: T_co(s) = e_o^T (I + M(s) L)^-1 e_c M(s) by dense LU solve.
/// This route never sees the product form, which is what makes it an oracle
/// for it.  Throws singular_sample near poles of M or of the network.
Complex resolvent_tf_eval(
  const WeightedDigraph & g, int c, int o, const RationalFunction & m, Complex s);

/// Compare a candidate transfer function against the resolvent oracle at
/// random sample points on the ring 0.5 <= |s| <= 2 (never all real, redrawn
/// near poles).  Fixed seed gives a byte-stable report.
ComparisonReport compare_tf(
  const RationalFunction & candidate, const WeightedDigraph & g, int c, int o,
  const RationalFunction & m, int n_samples = 32, double tol = 1e-8, unsigned seed = 12345);

/// Check sum_i rho_i v_oi lambda_i^k = (L^k)_oc for k = 0..k_max, where
/// rho_i is row i of V^-1 at column c.  Reported as skipped when the
/// eigenvector matrix is too ill-conditioned to trust.
ComparisonReport eigensum_identity_check(
  const WeightedDigraph & g, int c, int o, int k_max, double tol = 1e-7);

/// det(sI + L) assembled purely from forest enumeration: coefficient i is
/// the total weight of the spanning diverging forests with N - i arcs.
/// Exponential; independent of the Faddeev-LeVerrier route by construction.
Polynomial brute_force_char_coeffs(
  const WeightedDigraph & g, int node_cap = kDefaultForestNodeCap);

}  // namespace netfunc

#endif  // NETFUNC__VERIFY_HPP_
