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

#include "netfunc/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "netfunc/errors.hpp"
#include "netfunc/spectral.hpp"

namespace netfunc
{

namespace
{

Eigen::MatrixXd to_eigen(const Matrix & m)
{
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j);
    }
  }
  return out;
}

void check_port(const WeightedDigraph & g, int c, int o)
{
  if (c < 1 || c > g.node_count() || o < 1 || o > g.node_count()) {
    throw Error(Errc::index_out_of_range, "node label out of range");
  }
}

// Denominator magnitude below which a sample point counts as sitting on a
// pole: tiny relative to the coefficient size scaled by |s|^deg, so the rule
// does not depend on how the polynomial happens to be normalized.
double pole_scale(const Polynomial & den, Complex s)
{
  const double r = std::max(1.0, std::abs(s));
  return den.max_abs_coeff() * std::pow(r, std::max(0, den.degree()));
}

}  // namespace

EigenDecomposition eigen_decompose(const Matrix & l, double cond_limit)
{
  if (l.rows() != l.cols()) {
    throw Error(Errc::invalid_argument, "eigendecomposition needs a square matrix");
  }
  EigenDecomposition out;
  out.n = l.rows();
  if (out.n == 0) {
    out.condition = 1.0;
    out.accepted = true;
    return out;
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver(to_eigen(l), /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::invalid_laplacian, "eigendecomposition failed to converge");
  }
  const Eigen::MatrixXcd vec = solver.eigenvectors();
  out.eigenvalues.resize(out.n);
  for (int i = 0; i < out.n; ++i) {
    out.eigenvalues[i] = solver.eigenvalues()(i);
  }
  out.v.resize(static_cast<size_t>(out.n) * out.n);
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) {
      out.v[static_cast<size_t>(i) * out.n + j] = vec(i, j);
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vec);
  const double smin = svd.singularValues()(out.n - 1);
  const double smax = svd.singularValues()(0);
  out.condition = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  out.accepted = std::isfinite(out.condition) && out.condition <= cond_limit;
  if (!out.accepted) {
    return out;
  }

  const Eigen::MatrixXcd inv =
    vec.partialPivLu().solve(Eigen::MatrixXcd::Identity(out.n, out.n));
  out.v_inv.resize(static_cast<size_t>(out.n) * out.n);
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) {
      out.v_inv[static_cast<size_t>(i) * out.n + j] = inv(i, j);
    }
  }
  return out;
}

Complex resolvent_tf_eval(
  const WeightedDigraph & g, int c, int o, const RationalFunction & m, Complex s)
{
  check_port(g, c, o);
  const Complex den_val = m.den.eval(s);
  if (std::abs(den_val) <= 1e-12 * pole_scale(m.den, s)) {
    throw Error(Errc::singular_sample, "sample point sits on a pole of the agent");
  }
  const Complex m_val = m.num.eval(s) / den_val;

  const int n = g.node_count();
  const Matrix l = g.laplacian();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) += m_val * l(i, j);
    }
  }
  Eigen::VectorXcd e_c = Eigen::VectorXcd::Zero(n);
  e_c(c - 1) = 1.0;
  const Eigen::VectorXcd x = a.partialPivLu().solve(e_c);
  const double residual = (a * x - e_c).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff() * x.cwiseAbs().maxCoeff());
  if (!std::isfinite(residual) || residual > 1e-8 * scale) {
    throw Error(Errc::singular_sample, "resolvent solve is singular at this sample");
  }
  return x(o - 1) * m_val;
}

ComparisonReport compare_tf(
  const RationalFunction & candidate, const WeightedDigraph & g, int c, int o,
  const RationalFunction & m, int n_samples, double tol, unsigned seed)
{
  if (n_samples < 1) {
    throw Error(Errc::invalid_argument, "need at least one sample");
  }
  check_port(g, c, o);

  ComparisonReport report;
  report.tolerance = tol;
  report.seed = seed;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  const long attempt_cap = 64L * n_samples;
  long attempts = 0;
  while (static_cast<int>(report.samples.size()) < n_samples) {
    if (attempts >= attempt_cap) {
      throw Error(Errc::all_samples_rejected, "no usable sample points found on the ring");
    }
    ++attempts;
    const double r = radius(rng);
    double a = angle(rng);
    // Pull samples away from the real axis so conjugate-symmetric mistakes
    // cannot hide; the radius is kept so the retry stays on the same ring.
    while (std::abs(r * std::sin(a)) < 0.05 * r) {
      a = angle(rng);
    }
    const Complex s{r * std::cos(a), r * std::sin(a)};

    if (std::abs(candidate.den.eval(s)) < 1e-6 * pole_scale(candidate.den, s)) {
      continue;
    }
    if (std::abs(m.den.eval(s)) < 1e-6 * pole_scale(m.den, s)) {
      continue;
    }
    Complex oracle;
    try {
      oracle = resolvent_tf_eval(g, c, o, m, s);
    } catch (const Error & e) {
      if (e.code() == Errc::singular_sample) {
        continue;
      }
      throw;
    }
    const Complex value = candidate.num.eval(s) / candidate.den.eval(s);
    if (!std::isfinite(std::abs(value)) || !std::isfinite(std::abs(oracle))) {
      continue;
    }
    const double rel_err = std::abs(value - oracle) / std::max(std::abs(oracle), 1e-300);
    report.samples.push_back({s, value, oracle, rel_err});
    report.max_err = std::max(report.max_err, rel_err);
  }
  report.pass = report.max_err <= tol;
  return report;
}

ComparisonReport eigensum_identity_check(
  const WeightedDigraph & g, int c, int o, int k_max, double tol)
{
  check_port(g, c, o);
  if (k_max < 0) {
    throw Error(Errc::invalid_argument, "power bound must be non-negative");
  }
  const Matrix l = g.laplacian();
  const EigenDecomposition dec = eigen_decompose(l);

  ComparisonReport report;
  report.tolerance = tol;
  if (!dec.accepted) {
    // A defective (or nearly defective) eigenvector basis makes the spectral
    // expansion meaningless numerically; that is a property of the graph,
    // not a failure of the identity.
    report.pass = true;
    report.status = "skipped: eigenvector condition exceeds limit";
    return report;
  }

  const int n = g.node_count();
  const double l_norm = std::max(1.0, l.inf_norm());
  for (int k = 0; k <= k_max; ++k) {
    Complex sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex rho = dec.v_inv[static_cast<size_t>(i) * n + (c - 1)];
      const Complex v_oi = dec.v[static_cast<size_t>(o - 1) * n + i];
      sum += rho * v_oi * std::pow(dec.eigenvalues[i], k);
    }
    const double actual = laplacian_power_entry(l, k, o, c);
    const double scale = std::max(1.0, std::pow(l_norm, k));
    const double rel_err = std::abs(sum - Complex{actual, 0.0}) / scale;
    report.samples.push_back({Complex(k, 0.0), sum, Complex(actual, 0.0), rel_err});
    report.max_err = std::max(report.max_err, rel_err);
  }
  report.pass = report.max_err <= tol;
  return report;
}

Polynomial brute_force_char_coeffs(const WeightedDigraph & g, int node_cap)
{
  const int n = g.node_count();
  std::vector<double> coeffs(static_cast<size_t>(n) + 1, 0.0);
  for (int k = 0; k < n; ++k) {
    double total = 0.0;
    for (const OutForest & f : enumerate_out_forests(g, k, node_cap)) {
      total += f.weight;
    }
    coeffs[static_cast<size_t>(n - k)] = total;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace netfunc
