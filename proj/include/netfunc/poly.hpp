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

#ifndef NETFUNC__POLY_HPP_
#define NETFUNC__POLY_HPP_

#include <complex>
#include <initializer_list>
#include <vector>

namespace netfunc
{

using Complex = std::complex<double>;

/// Roots or gains with multiplicity, sorted by (real, imag).
using ComplexMultiset = std::vector<Complex>;

/// Real polynomial in ascending coefficient order: c[0] + c[1] s + ...
/// The zero polynomial is stored as an empty vector; otherwise the leading
/// coefficient is nonzero (exact trailing zeros are trimmed).
class Polynomial
{
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial monomial(int degree, double coeff = 1.0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of s^i; 0 beyond the stored degree.
  double coeff(int i) const;
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }
  const std::vector<double> & coeffs() const { return c_; }
  double max_abs_coeff() const;

  double eval(double s) const;
  Complex eval(Complex s) const;

  bool operator==(const Polynomial & other) const = default;

private:
  std::vector<double> c_;
};

/// Complex-coefficient companion of Polynomial, used where gains come in
/// conjugate pairs and intermediate products are not real.
class CPolynomial
{
public:
  CPolynomial() = default;
  CPolynomial(std::initializer_list<Complex> coeffs);
  explicit CPolynomial(std::vector<Complex> coeffs);
  explicit CPolynomial(const Polynomial & p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Complex coeff(int i) const;
  const std::vector<Complex> & coeffs() const { return c_; }
  double max_abs_coeff() const;

  Complex eval(Complex s) const;

  bool operator==(const CPolynomial & other) const = default;

private:
  std::vector<Complex> c_;
};

Polynomial poly_add(const Polynomial & a, const Polynomial & b);
Polynomial poly_mul(const Polynomial & a, const Polynomial & b);
Polynomial poly_scale(const Polynomial & a, double s);

CPolynomial poly_add(const CPolynomial & a, const CPolynomial & b);
CPolynomial poly_mul(const CPolynomial & a, const CPolynomial & b);
CPolynomial poly_scale(const CPolynomial & a, Complex s);

/// Demote complex coefficients to real, requiring every imaginary residue to
/// be at most tol * max(1, max |coeff|).
Polynomial real_coefficients(const CPolynomial & p, double tol = 1e-9);

/// psi + k * phi.
Polynomial closed_loop_factor(const Polynomial & psi, const Polynomial & phi, double k);
CPolynomial closed_loop_factor(const Polynomial & psi, const Polynomial & phi, Complex k);

/// All complex roots with multiplicity, conjugate-paired for real input,
/// sorted by (real, imag).  Companion-matrix eigenvalues (balanced, QR
/// iterated) followed by a guarded Newton polish toward residual
/// |p(root)| <= tol * (1 + max |coeff|).
ComplexMultiset poly_roots(const Polynomial & p, double tol = 1e-9);

/// lead * prod (s - r_i), demoted to real coefficients.
Polynomial poly_from_roots(double lead, const ComplexMultiset & roots);

/// Ratio of polynomials.  No implicit pole/zero cancellation, ever.
struct RationalFunction
{
  RationalFunction() = default;
  RationalFunction(Polynomial num_in, Polynomial den_in);

  Complex eval(Complex s) const;

  Polynomial num;
  Polynomial den{{1.0}};

  bool operator==(const RationalFunction & other) const = default;
};

/// deg(den) - deg(num); throws on a zero numerator.
int rational_relative_degree(const RationalFunction & m);

/// Evaluate at many points.  The OpenMP variant parallelizes over points and
/// matches eval_grid_serial bitwise.
std::vector<Complex> eval_grid_serial(
  const RationalFunction & f, const std::vector<Complex> & points);
std::vector<Complex> eval_grid(const RationalFunction & f, const std::vector<Complex> & points);

}  // namespace netfunc

#endif  // NETFUNC__POLY_HPP_
