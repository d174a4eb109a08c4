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

#include "netfunc/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "netfunc/errors.hpp"

namespace netfunc
{

namespace
{

template <typename T>
void trim(std::vector<T> & c)
{
  while (!c.empty() && c.back() == T(0)) {
    c.pop_back();
  }
}

template <typename T>
std::vector<T> add_impl(const std::vector<T> & a, const std::vector<T> & b)
{
  std::vector<T> c(std::max(a.size(), b.size()), T(0));
  for (size_t i = 0; i < a.size(); ++i) {
    c[i] += a[i];
  }
  for (size_t i = 0; i < b.size(); ++i) {
    c[i] += b[i];
  }
  trim(c);
  return c;
}

template <typename T>
std::vector<T> mul_impl(const std::vector<T> & a, const std::vector<T> & b)
{
  if (a.empty() || b.empty()) {
    return {};
  }
  std::vector<T> c(a.size() + b.size() - 1, T(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  trim(c);
  return c;
}

template <typename T, typename S>
std::vector<T> scale_impl(const std::vector<T> & a, S s)
{
  std::vector<T> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i] * s;
  }
  trim(c);
  return c;
}

template <typename T>
Complex horner(const std::vector<T> & c, Complex s)
{
  Complex acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * s + Complex(*it);
  }
  return acc;
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<double> coeffs) : c_(coeffs)
{
  trim(c_);
}

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs))
{
  trim(c_);
}

Polynomial Polynomial::monomial(int degree, double coeff)
{
  if (degree < 0) {
    throw Error(Errc::invalid_argument, "monomial degree must be non-negative");
  }
  std::vector<double> c(degree + 1, 0.0);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

double Polynomial::coeff(int i) const
{
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0.0;
}

double Polynomial::max_abs_coeff() const
{
  double m = 0.0;
  for (double v : c_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double Polynomial::eval(double s) const
{
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * s + *it;
  }
  return acc;
}

Complex Polynomial::eval(Complex s) const
{
  return horner(c_, s);
}

CPolynomial::CPolynomial(std::initializer_list<Complex> coeffs) : c_(coeffs)
{
  trim(c_);
}

CPolynomial::CPolynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs))
{
  trim(c_);
}

CPolynomial::CPolynomial(const Polynomial & p)
{
  c_.reserve(p.coeffs().size());
  for (double v : p.coeffs()) {
    c_.emplace_back(v, 0.0);
  }
}

Complex CPolynomial::coeff(int i) const
{
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Complex(0.0, 0.0);
}

double CPolynomial::max_abs_coeff() const
{
  double m = 0.0;
  for (const Complex & v : c_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

Complex CPolynomial::eval(Complex s) const
{
  return horner(c_, s);
}

Polynomial poly_add(const Polynomial & a, const Polynomial & b)
{
  return Polynomial(add_impl(a.coeffs(), b.coeffs()));
}

Polynomial poly_mul(const Polynomial & a, const Polynomial & b)
{
  return Polynomial(mul_impl(a.coeffs(), b.coeffs()));
}

Polynomial poly_scale(const Polynomial & a, double s)
{
  return Polynomial(scale_impl(a.coeffs(), s));
}

CPolynomial poly_add(const CPolynomial & a, const CPolynomial & b)
{
  return CPolynomial(add_impl(a.coeffs(), b.coeffs()));
}

CPolynomial poly_mul(const CPolynomial & a, const CPolynomial & b)
{
  return CPolynomial(mul_impl(a.coeffs(), b.coeffs()));
}

CPolynomial poly_scale(const CPolynomial & a, Complex s)
{
  return CPolynomial(scale_impl(a.coeffs(), s));
}

Polynomial real_coefficients(const CPolynomial & p, double tol)
{
  const double bound = tol * std::max(1.0, p.max_abs_coeff());
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const Complex & v : p.coeffs()) {
    if (std::abs(v.imag()) > bound) {
      throw Error(Errc::nonreal_coefficients, "imaginary residue above tolerance");
    }
    c.push_back(v.real());
  }
  return Polynomial(std::move(c));
}

Polynomial closed_loop_factor(const Polynomial & psi, const Polynomial & phi, double k)
{
  if (psi.is_zero() && phi.is_zero()) {
    throw Error(Errc::invalid_argument, "psi and phi are both zero");
  }
  return poly_add(psi, poly_scale(phi, k));
}

CPolynomial closed_loop_factor(const Polynomial & psi, const Polynomial & phi, Complex k)
{
  if (psi.is_zero() && phi.is_zero()) {
    throw Error(Errc::invalid_argument, "psi and phi are both zero");
  }
  return poly_add(CPolynomial(psi), poly_scale(CPolynomial(phi), k));
}

namespace
{

// Parlett-Reinsch balancing restricted to exact powers of two, so the
// eigenvalues move only through better conditioning, never rounding.
void balance(Eigen::MatrixXd & a)
{
  const int n = static_cast<int>(a.rows());
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          c += std::abs(a(j, i));
          r += std::abs(a(i, j));
        }
      }
      if (c == 0.0 || r == 0.0) {
        continue;
      }
      double f = 1.0;
      const double s = c + r;
      while (c < r / 2.0) {
        c *= 2.0;
        r /= 2.0;
        f *= 2.0;
      }
      while (c >= r * 2.0) {
        c /= 2.0;
        r *= 2.0;
        f /= 2.0;
      }
      if ((c + r) < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

Complex newton_polish(const Polynomial & p, Complex z, double target)
{
  // Derivative coefficients on the fly; accept steps only while the residual
  // improves, so multiple roots are left where the eigensolver put them.
  const auto & c = p.coeffs();
  double best = std::abs(p.eval(z));
  for (int iter = 0; iter < 3 && best > target; ++iter) {
    Complex d(0.0, 0.0);
    for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i) {
      d = d * z + Complex(c[i] * i);
    }
    if (std::abs(d) == 0.0) {
      break;
    }
    const Complex step = p.eval(z) / d;
    const Complex zn = z - step;
    const double rn = std::abs(p.eval(zn));
    if (rn >= best) {
      break;
    }
    z = zn;
    best = rn;
  }
  return z;
}

}  // namespace

ComplexMultiset poly_roots(const Polynomial & p, double tol)
{
  if (p.is_zero()) {
    throw Error(Errc::zero_polynomial, "cannot take roots of the zero polynomial");
  }
  const int n = p.degree();
  if (n == 0) {
    return {};
  }
  const double lead = p.leading();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    companion(i + 1, i) = 1.0;
  }
  for (int i = 0; i < n; ++i) {
    companion(i, n - 1) = -p.coeff(i) / lead;
  }
  balance(companion);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::invalid_argument, "companion eigenvalue iteration failed");
  }

  const double target = tol * (1.0 + p.max_abs_coeff());
  ComplexMultiset roots;
  roots.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Complex z = solver.eigenvalues()[i];
    if (z.imag() == 0.0) {
      roots.push_back(newton_polish(p, z, target));
    } else if (z.imag() > 0.0) {
      // Polish the upper root and mirror it, keeping pairs exactly conjugate.
      const Complex zp = newton_polish(p, z, target);
      roots.push_back(zp);
      roots.push_back(std::conj(zp));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Complex & a, const Complex & b) {
    return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
  });
  return roots;
}

Polynomial poly_from_roots(double lead, const ComplexMultiset & roots)
{
  CPolynomial acc({Complex(lead, 0.0)});
  for (const Complex & r : roots) {
    acc = poly_mul(acc, CPolynomial({-r, Complex(1.0, 0.0)}));
  }
  return real_coefficients(acc, 1e-9);
}

RationalFunction::RationalFunction(Polynomial num_in, Polynomial den_in)
: num(std::move(num_in)), den(std::move(den_in))
{
  if (den.is_zero()) {
    throw Error(Errc::zero_denominator, "rational function denominator is zero");
  }
}

Complex RationalFunction::eval(Complex s) const
{
  return num.eval(s) / den.eval(s);
}

int rational_relative_degree(const RationalFunction & m)
{
  if (m.num.is_zero()) {
    throw Error(Errc::zero_numerator, "relative degree of a zero numerator");
  }
  return m.den.degree() - m.num.degree();
}

std::vector<Complex> eval_grid_serial(
  const RationalFunction & f, const std::vector<Complex> & points)
{
  std::vector<Complex> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    out[i] = f.eval(points[i]);
  }
  return out;
}

std::vector<Complex> eval_grid(const RationalFunction & f, const std::vector<Complex> & points)
{
  std::vector<Complex> out(points.size());
  const long long n = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static) if (n >= 256)
  for (long long i = 0; i < n; ++i) {
    out[i] = f.eval(points[i]);
  }
  return out;
}

}  // namespace netfunc
