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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "netfunc/errors.hpp"
#include "netfunc/poly.hpp"
#include "support/oracles.hpp"

using namespace netfunc;        // NOLINT
using namespace netfunc::test;  // NOLINT

TEST_CASE("polynomial construction trims exact trailing zeros")
{
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial{}.is_zero());
  CHECK(Polynomial{0.0, 0.0}.is_zero());
  CHECK(Polynomial{1.0, 2.0, 0.0}.degree() == 1);
  CHECK(Polynomial{0.0, 1.0}.degree() == 1);
  CHECK(Polynomial::monomial(3).coeffs() == std::vector<double>{0.0, 0.0, 0.0, 1.0});
  CHECK(Polynomial::monomial(0, 2.5).coeffs() == std::vector<double>{2.5});
  CHECK(Polynomial{1.0, 2.0}.coeff(7) == 0.0);
  CHECK(Polynomial{1.0, 2.0}.leading() == 2.0);
  CHECK(Polynomial{}.leading() == 0.0);
}

TEST_CASE("polynomial arithmetic basics")
{
  const Polynomial s1{1.0, 1.0};
  const Polynomial sq = poly_mul(s1, s1);
  CHECK(sq.coeffs() == std::vector<double>{1.0, 2.0, 1.0});

  CHECK(poly_mul(s1, Polynomial{}).is_zero());
  CHECK(poly_add(s1, Polynomial{}).coeffs() == s1.coeffs());
  CHECK(poly_add(s1, poly_scale(s1, -1.0)).is_zero());
  CHECK(poly_scale(sq, 0.0).is_zero());

  // (s^2)(s + 1) + 0.5 (s + 1) = s^3 + s^2 + 0.5 s + 0.5
  const Polynomial composite =
    poly_add(poly_mul(Polynomial{0.0, 0.0, 1.0}, s1), poly_scale(s1, 0.5));
  CHECK(composite.coeffs() == std::vector<double>{0.5, 0.5, 1.0, 1.0});
}

TEST_CASE("multiplication is commutative and near-associative")
{
  std::mt19937 gen(201);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int rep = 0; rep < 25; ++rep) {
    auto rand_poly = [&](int deg) {
      std::vector<double> c(static_cast<size_t>(deg) + 1);
      for (double & x : c) {
        x = coeff(gen);
      }
      c.back() = c.back() == 0.0 ? 1.0 : c.back();
      return Polynomial(c);
    };
    const Polynomial a = rand_poly(3);
    const Polynomial b = rand_poly(4);
    const Polynomial c = rand_poly(2);
    // Swapping operands reorders the floating-point accumulation, so only
    // agreement up to roundoff is guaranteed.
    CHECK(poly_max_diff(poly_mul(a, b), poly_mul(b, a)) <= 1e-12);
    CHECK(poly_max_diff(poly_mul(poly_mul(a, b), c), poly_mul(a, poly_mul(b, c))) <= 1e-12);
    CHECK(
      poly_max_diff(poly_mul(a, poly_add(b, c)),
        poly_add(poly_mul(a, b), poly_mul(a, c))) <= 1e-12);
  }
}

TEST_CASE("evaluation matches the naive power sum")
{
  const Polynomial p{1.5, 3.5, 1.0};
  CHECK(p.eval(-0.5) == 0.0);
  CHECK(p.eval(0.0) == 1.5);
  CHECK(p.eval(Complex{-3.0, 0.0}) == Complex{0.0, 0.0});

  std::mt19937 gen(202);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> c(8);
    for (double & x : c) {
      x = coeff(gen);
    }
    const Polynomial q(c);
    const Complex s{coeff(gen), coeff(gen)};
    const Complex direct = naive_poly_eval(q, s);
    CHECK(std::abs(q.eval(s) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
}

TEST_CASE("roots of the quadratic 1.5 + 3.5 s + s^2")
{
  const auto roots = poly_roots(Polynomial{1.5, 3.5, 1.0});
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - Complex{-3.0, 0.0}) <= 1e-9);
  CHECK(std::abs(roots[1] - Complex{-0.5, 0.0}) <= 1e-9);
}

TEST_CASE("roots of monomials and degenerate inputs")
{
  const auto triple = poly_roots(Polynomial::monomial(3, 2.0));
  REQUIRE(triple.size() == 3);
  for (const Complex & r : triple) {
    CHECK(std::abs(r) <= 1e-9);
  }
  CHECK(poly_roots(Polynomial{4.2}).empty());
  CHECK(error_code_of([] { poly_roots(Polynomial{}); }) == Errc::zero_polynomial);

  const auto lin = poly_roots(Polynomial{3.0, 2.0});
  REQUIRE(lin.size() == 1);
  CHECK(std::abs(lin[0] - Complex{-1.5, 0.0}) <= 1e-12);
}

TEST_CASE("roots of the worked characteristic polynomial")
{
  const Polynomial g{0.0, 7.9, 29.05, 26.15, 8.8, 1.0};
  const auto roots = poly_roots(g);
  REQUIRE(roots.size() == 5);
  const double expect[5] = {-3.69, -2.72, -2.0, -0.39, 0.0};
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(roots[static_cast<size_t>(i)].real() - expect[i]) <= 5e-3);
    CHECK(std::abs(roots[static_cast<size_t>(i)].imag()) <= 1e-9);
  }
}

TEST_CASE("complex roots come in exactly mirrored conjugate pairs")
{
  const auto r = poly_roots(Polynomial{1.0, 1.0, 1.0});
  REQUIRE(r.size() == 2);
  CHECK(r[0].real() == r[1].real());
  CHECK(r[0].imag() == -r[1].imag());
  CHECK(std::abs(r[0] - Complex{-0.5, -std::sqrt(3.0) / 2.0}) <= 1e-12);
}

TEST_CASE("root residuals stay below the polish target")
{
  std::mt19937 gen(203);
  std::uniform_real_distribution<double> k(0.1, 3.0);
  for (int rep = 0; rep < 20; ++rep) {
    // products of closed-loop style factors, the shapes this library roots
    Polynomial p{1.0};
    const Polynomial psi{0.0, k(gen), 1.0};
    const Polynomial phi{k(gen), 1.0};
    const int factors = 1 + rep % 5;
    for (int i = 0; i < factors; ++i) {
      p = poly_mul(p, closed_loop_factor(psi, phi, k(gen)));
    }
    for (const Complex & r : poly_roots(p)) {
      CHECK(std::abs(p.eval(r)) <= 1e-9 * (1.0 + p.max_abs_coeff()));
    }
  }
}

TEST_CASE("poly_from_roots round trip")
{
  std::mt19937 gen(204);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int rep = 0; rep < 15; ++rep) {
    const int deg = 2 + rep % 11;  // up to 12
    std::vector<double> c(static_cast<size_t>(deg) + 1);
    for (double & x : c) {
      x = coeff(gen);
    }
    c.back() = 1.0 + std::abs(c.back());
    const Polynomial p(c);
    const Polynomial back = poly_from_roots(p.leading(), poly_roots(p));
    CHECK(poly_max_diff(p, back) <= 1e-8);
  }
  CHECK(poly_from_roots(2.0, {}).coeffs() == std::vector<double>{2.0});
}

TEST_CASE("closed loop factor")
{
  const Polynomial psi{0.0, 0.0, 1.0};
  const Polynomial phi{1.0, 1.0};
  CHECK(closed_loop_factor(psi, phi, 2.0).coeffs() == std::vector<double>{2.0, 2.0, 1.0});
  CHECK(closed_loop_factor(psi, phi, 0.0).coeffs() == psi.coeffs());

  // complex gains pair up to a real product
  const Complex lam{1.0, 2.0};
  const CPolynomial f1 = closed_loop_factor(psi, phi, lam);
  const CPolynomial f2 = closed_loop_factor(psi, phi, std::conj(lam));
  const Polynomial prod = real_coefficients(poly_mul(f1, f2), 1e-12);
  // (psi + lam phi)(psi + conj(lam) phi) = psi^2 + 2 Re(lam) psi phi + |lam|^2 phi^2
  const Polynomial direct = poly_add(
    poly_add(poly_mul(psi, psi), poly_scale(poly_mul(psi, phi), 2.0 * lam.real())),
    poly_scale(poly_mul(phi, phi), std::norm(lam)));
  CHECK(poly_max_diff(prod, direct) <= 1e-12);
}

TEST_CASE("real_coefficients enforces its tolerance")
{
  const CPolynomial ok{Complex{1.0, 1e-12}, Complex{2.0, -1e-12}};
  const Polynomial p = real_coefficients(ok, 1e-9);
  CHECK(p.coeffs() == std::vector<double>{1.0, 2.0});
  CHECK(
    error_code_of([] {
      real_coefficients(CPolynomial{Complex{1.0, 0.5}}, 1e-9);
    }) == Errc::nonreal_coefficients);
}

TEST_CASE("rational function construction and relative degree")
{
  CHECK(
    error_code_of([] {
      RationalFunction(Polynomial{1.0}, Polynomial{});
    }) == Errc::zero_denominator);
  const RationalFunction m(Polynomial{1.0, 1.0}, Polynomial{0.0, 0.0, 1.0});
  CHECK(rational_relative_degree(m) == 1);
  CHECK(rational_relative_degree(RationalFunction(Polynomial{2.0}, Polynomial{1.0})) == 0);
  CHECK(
    rational_relative_degree(RationalFunction(Polynomial{0.0, 0.0, 1.0}, Polynomial{1.0})) ==
    -2);
  CHECK(
    error_code_of([] {
      rational_relative_degree(RationalFunction(Polynomial{}, Polynomial{1.0}));
    }) == Errc::zero_numerator);

  // eval never cancels: 0/0 at a shared root is inf or nan, not patched
  const Complex at_pole = m.eval(Complex{0.0, 0.0});
  CHECK(!std::isfinite(std::abs(at_pole)));
}

TEST_CASE("eval_grid matches serial reference bitwise")
{
  std::mt19937 gen(205);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::vector<double> nc(7);
  std::vector<double> dc(9);
  for (double & x : nc) {
    x = coeff(gen);
  }
  for (double & x : dc) {
    x = coeff(gen);
  }
  dc.back() = 1.0;
  const RationalFunction f{Polynomial(nc), Polynomial(dc)};
  std::vector<Complex> pts(501);
  for (auto & p : pts) {
    p = Complex{coeff(gen), coeff(gen)};
  }
  const auto fast = eval_grid(f, pts);
  const auto slow = eval_grid_serial(f, pts);
  REQUIRE(fast.size() == pts.size());
  CHECK(fast == slow);
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(fast[i] == f.eval(pts[i]));
  }
}
