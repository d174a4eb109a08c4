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

#include "netfunc/netfunc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netfunc/errors.hpp"
#include "netfunc/spectral.hpp"

namespace netfunc
{

AgentModel::AgentModel(RationalFunction plant_in, RationalFunction controller_in)
: plant(std::move(plant_in)), controller(std::move(controller_in))
{
  if (phi().is_zero()) {
    throw Error(Errc::zero_numerator, "open-loop numerator b q is zero");
  }
  if (relative_degree() < 0) {
    throw Error(Errc::negative_relative_degree, "open loop is improper");
  }
}

Polynomial AgentModel::phi() const
{
  return poly_mul(plant.num, controller.num);
}

Polynomial AgentModel::psi() const
{
  return poly_mul(plant.den, controller.den);
}

RationalFunction AgentModel::open_loop() const
{
  return RationalFunction(phi(), psi());
}

int AgentModel::relative_degree() const
{
  return rational_relative_degree(open_loop());
}

RationalFunction port_open_loop(const AgentModel & agent, InputKind kind)
{
  switch (kind) {
    case InputKind::kControllerInput:
      return agent.open_loop();
    case InputKind::kPlantInput:
      return agent.plant;
    case InputKind::kPlantOutput:
      return RationalFunction(Polynomial{1.0}, Polynomial{1.0});
  }
  throw Error(Errc::invalid_argument, "unknown input kind");
}

SingleIntegratorTF single_integrator_tf(const WeightedDigraph & g, int c, int o)
{
  const int n = g.node_count();
  if (c < 1 || c > n || o < 1 || o > n) {
    throw Error(Errc::index_out_of_range, "node label out of range");
  }
  const ForestSeries fs = faddeev_leverrier(g.laplacian());

  SingleIntegratorTF tf;
  tf.denominator = fs.char_poly;
  tf.distance = hop_distance(g, c, o);

  // h_i is the (o, c) adjugate entry of s^i, i.e. entry (o-1, c-1) of
  // q[N-1-i]; entries below the hop distance are structural zeros.
  std::vector<double> h(n, 0.0);
  for (int i = 0; i < n; ++i) {
    h[i] = fs.q[n - 1 - i](o - 1, c - 1);
  }
  tf.numerator = Polynomial(std::move(h));
  tf.theta = tf.distance ? tf.numerator.coeff(n - *tf.distance - 1) : 0.0;
  return tf;
}

namespace
{

constexpr double kZeroGainTol = 1e-8;

// Index of the single gain within tolerance of zero.
int zero_gain_index(const ComplexMultiset & gains)
{
  double scale = 1.0;
  for (const Complex & z : gains) {
    scale = std::max(scale, std::abs(z));
  }
  int found = -1;
  for (size_t i = 0; i < gains.size(); ++i) {
    if (std::abs(gains[i]) <= kZeroGainTol * scale) {
      if (found >= 0) {
        throw Error(Errc::multiple_zero_eigenvalues, "zero eigenvalue is not simple");
      }
      found = static_cast<int>(i);
    }
  }
  if (found < 0) {
    throw Error(Errc::invalid_laplacian, "no eigenvalue at zero");
  }
  return found;
}

// Product of closed-loop factors over the given gains, complex throughout,
// demoted to real at the end.  Gains are multiplied in sorted order; the
// sort puts conjugate partners next to each other.
CPolynomial gain_product(
  const Polynomial & psi, const Polynomial & phi, ComplexMultiset gains)
{
  std::sort(gains.begin(), gains.end(), [](const Complex & a, const Complex & b) {
    return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
  });
  // Unpaired complex gains would make the demotion fail with an opaque
  // message, so check conjugate symmetry up front.
  ComplexMultiset pending;
  for (const Complex & z : gains) {
    if (z.imag() == 0.0) {
      continue;
    }
    auto it = std::find_if(pending.begin(), pending.end(), [&](const Complex & w) {
      return std::abs(std::conj(w) - z) <= 1e-7 * std::max(1.0, std::abs(z));
    });
    if (it != pending.end()) {
      pending.erase(it);
    } else {
      pending.push_back(z);
    }
  }
  if (!pending.empty()) {
    throw Error(Errc::non_conjugate_gains, "complex gains do not come in conjugate pairs");
  }

  CPolynomial acc({Complex(1.0, 0.0)});
  for (const Complex & k : gains) {
    acc = poly_mul(acc, closed_loop_factor(psi, phi, k));
  }
  return acc;
}

Polynomial phi_power(const Polynomial & phi, int e)
{
  Polynomial acc{1.0};
  for (int i = 0; i < e; ++i) {
    acc = poly_mul(acc, phi);
  }
  return acc;
}

}  // namespace

ProductFormTF product_form_tf(const WeightedDigraph & g, int c, int o, const AgentModel & agent)
{
  const SingleIntegratorTF tf = single_integrator_tf(g, c, o);
  if (!tf.distance) {
    throw Error(
      Errc::no_path, "node " + std::to_string(o) + " unreachable from " + std::to_string(c));
  }
  ProductFormTF pf;
  pf.agent = agent;
  pf.c = c;
  pf.o = o;
  pf.theta = tf.theta;
  pf.distance = *tf.distance;
  pf.lambda_gains = laplacian_eigenvalues(g.laplacian());
  pf.gamma_gains = poly_roots(tf.numerator);
  for (Complex & z : pf.gamma_gains) {
    // Avoid -0.0 components so negated real roots print and compare cleanly.
    z = Complex(
      z.real() == 0.0 ? 0.0 : -z.real(), z.imag() == 0.0 ? 0.0 : -z.imag());
  }
  std::sort(
    pf.gamma_gains.begin(), pf.gamma_gains.end(), [](const Complex & a, const Complex & b) {
      return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
    });
  return pf;
}

RationalFunction expand_product_form(const ProductFormTF & pf)
{
  const Polynomial psi = pf.agent.psi();
  const Polynomial phi = pf.agent.phi();
  CPolynomial num = gain_product(psi, phi, pf.gamma_gains);
  num = poly_mul(num, CPolynomial(phi_power(phi, 1 + pf.distance)));
  num = poly_scale(num, Complex(pf.theta, 0.0));
  const CPolynomial den = gain_product(psi, phi, pf.lambda_gains);
  return RationalFunction(real_coefficients(num), real_coefficients(den));
}

std::vector<SeriesFactor> series_factors(const ProductFormTF & pf)
{
  const Polynomial psi = pf.agent.psi();
  const Polynomial phi = pf.agent.phi();
  ComplexMultiset lambdas = pf.lambda_gains;
  std::sort(lambdas.begin(), lambdas.end(), [](const Complex & a, const Complex & b) {
    return std::pair(a.real(), a.imag()) < std::pair(b.real(), b.imag());
  });

  const int n_agent_like = pf.distance + 1;
  if (static_cast<int>(lambdas.size()) < n_agent_like) {
    throw Error(Errc::invalid_argument, "gain counts inconsistent with distance");
  }
  std::vector<SeriesFactor> out;
  // Smallest lambdas (the zero eigenvalue first) go to the agent-like
  // factors; the rest pair up with the gammas as biproper factors.
  for (size_t i = n_agent_like; i < lambdas.size(); ++i) {
    const size_t j = i - n_agent_like;
    if (j >= pf.gamma_gains.size()) {
      throw Error(Errc::invalid_argument, "gain counts inconsistent with distance");
    }
    SeriesFactor f;
    f.lambda = lambdas[i];
    f.gamma = pf.gamma_gains[j];
    f.numerator = closed_loop_factor(psi, phi, *f.gamma);
    f.denominator = closed_loop_factor(psi, phi, f.lambda);
    f.biproper = true;
    out.push_back(std::move(f));
  }
  for (int i = 0; i < n_agent_like; ++i) {
    SeriesFactor f;
    f.lambda = lambdas[i];
    f.numerator = CPolynomial(phi);
    f.denominator = closed_loop_factor(psi, phi, f.lambda);
    f.biproper = false;
    out.push_back(std::move(f));
  }
  return out;
}

RationalFunction network_part(const WeightedDigraph & g, int c, int o, const AgentModel & agent)
{
  const ProductFormTF pf = product_form_tf(g, c, o, agent);
  const Polynomial psi = agent.psi();
  const Polynomial phi = agent.phi();

  ComplexMultiset lambdas = pf.lambda_gains;
  lambdas.erase(lambdas.begin() + zero_gain_index(lambdas));

  CPolynomial num = gain_product(psi, phi, pf.gamma_gains);
  num = poly_mul(num, CPolynomial(phi_power(phi, pf.distance)));
  num = poly_scale(num, Complex(pf.theta, 0.0));
  const CPolynomial den = gain_product(psi, phi, lambdas);
  return RationalFunction(real_coefficients(num), real_coefficients(den));
}

RationalFunction general_io_tf(const RationalFunction & network, const RationalFunction & ms)
{
  return RationalFunction(poly_mul(network.num, ms.num), poly_mul(network.den, ms.den));
}

int relative_degree_co(const AgentModel & agent, int d_co)
{
  if (d_co < 0) {
    throw Error(Errc::invalid_argument, "distance must be non-negative");
  }
  return (d_co + 1) * agent.relative_degree();
}

double steady_state_gain(const ProductFormTF & pf)
{
  const Polynomial psi = pf.agent.psi();
  if (std::abs(psi.coeff(0)) > 1e-12 * std::max(1.0, psi.max_abs_coeff())) {
    throw Error(Errc::no_integrator, "open loop has no integrator");
  }
  ComplexMultiset lambdas = pf.lambda_gains;
  lambdas.erase(lambdas.begin() + zero_gain_index(lambdas));

  ComplexMultiset gammas = pf.gamma_gains;
  double gscale = 1.0;
  for (const Complex & z : gammas) {
    gscale = std::max(gscale, std::abs(z));
  }
  int zero_gamma = -1;
  for (size_t i = 0; i < gammas.size(); ++i) {
    if (std::abs(gammas[i]) <= kZeroGainTol * gscale) {
      zero_gamma = static_cast<int>(i);
      break;
    }
  }
  if (zero_gamma < 0) {
    return std::numeric_limits<double>::infinity();
  }
  gammas.erase(gammas.begin() + zero_gamma);

  Complex acc(pf.theta, 0.0);
  for (const Complex & z : gammas) {
    acc *= z;
  }
  for (const Complex & z : lambdas) {
    acc /= z;
  }
  if (std::abs(acc.imag()) > 1e-9 * (1.0 + std::abs(acc))) {
    throw Error(Errc::nonreal_coefficients, "steady-state gain has imaginary residue");
  }
  return acc.real();
}

Polynomial collocated_numerator(const WeightedDigraph & g, int c)
{
  return faddeev_leverrier(reduced_laplacian(g, {c})).char_poly;
}

Polynomial one_path_numerator(const WeightedDigraph & g, int c, int o)
{
  const std::vector<Path> paths = enumerate_simple_paths(g, c, o, 2);
  if (paths.empty()) {
    throw Error(
      Errc::no_path, "node " + std::to_string(o) + " unreachable from " + std::to_string(c));
  }
  if (paths.size() > 1) {
    throw Error(Errc::path_not_unique, "more than one simple path");
  }
  const Matrix reduced = reduced_laplacian(g, paths[0].vertices);
  return poly_scale(faddeev_leverrier(reduced).char_poly, paths[0].weight);
}

Polynomial multi_path_numerator(const WeightedDigraph & g, int c, int o, int max_paths)
{
  const std::vector<Path> paths = enumerate_simple_paths(g, c, o, max_paths);
  if (paths.empty()) {
    throw Error(
      Errc::no_path, "node " + std::to_string(o) + " unreachable from " + std::to_string(c));
  }
  Polynomial h;
  for (const Path & p : paths) {
    const Matrix reduced = reduced_laplacian(g, p.vertices);
    h = poly_add(h, poly_scale(faddeev_leverrier(reduced).char_poly, p.weight));
  }
  return h;
}

Polynomial multi_controlling_numerator(
  const WeightedDigraph & g, const std::vector<int> & controlling, int o)
{
  if (controlling.empty()) {
    throw Error(Errc::invalid_argument, "controlling set is empty");
  }
  std::vector<int> sorted = controlling;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::duplicate_node, "controlling set has duplicates");
  }
  Polynomial h;
  for (int c : sorted) {
    h = poly_add(h, single_integrator_tf(g, c, o).numerator);
  }
  return h;
}

ControllabilityReport controllability_report(const WeightedDigraph & g, int c)
{
  const int n = g.node_count();
  if (c < 1 || c > n) {
    throw Error(Errc::index_out_of_range, "node label out of range");
  }
  const Matrix l = g.laplacian();

  Matrix ctrb(n, n + 1);
  std::vector<double> v(n, 0.0);
  v[c - 1] = 1.0;
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      ctrb(i, k) = v[i];
    }
    if (k < n) {
      v = matvec(l, v);
    }
  }

  ControllabilityReport report;
  report.rows = n;
  report.cols = n + 1;
  report.actual_rank = matrix_rank(ctrb);
  int max_d = 0;
  for (int i = 1; i <= n; ++i) {
    if (const auto d = hop_distance(g, c, i)) {
      max_d = std::max(max_d, *d);
    } else {
      report.unreachable.push_back(i);
    }
  }
  report.bound = max_d + 1;
  return report;
}

}  // namespace netfunc
