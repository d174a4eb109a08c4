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

#ifndef NETFUNC__NETFUNC_HPP_
#define NETFUNC__NETFUNC_HPP_

#include <optional>
#include <vector>

#include "netfunc/graph.hpp"
#include "netfunc/poly.hpp"

namespace netfunc
{

/// Identical SISO agent: plant G = b/a in series with controller R = q/p in
/// the local loop u = R (r - y), y = G u.  The open loop is M = G R.
struct AgentModel
{
  AgentModel() = default;
  AgentModel(RationalFunction plant_in, RationalFunction controller_in);

  /// Open-loop numerator  phi = b q.
  Polynomial phi() const;
  /// Open-loop denominator  psi = a p.
  Polynomial psi() const;
  RationalFunction open_loop() const;
  /// chi = deg(a p) - deg(b q), validated non-negative on construction.
  int relative_degree() const;

  RationalFunction plant{Polynomial{1.0}, Polynomial{1.0}};
  RationalFunction controller{Polynomial{1.0}, Polynomial{1.0}};

  bool operator==(const AgentModel & other) const = default;
};

/// Injection point of the exogenous signal at the controlling agent.
enum class InputKind {
  kControllerInput,  ///< reference r: scalar part M
  kPlantInput,       ///< input disturbance: scalar part G
  kPlantOutput,      ///< output disturbance: scalar part 1
};

/// Scalar open-loop part M_s selecting where the input enters the agent.
RationalFunction port_open_loop(const AgentModel & agent, InputKind kind);

struct PortSelection
{
  std::vector<int> controlling;
  int observing{1};
  InputKind input_kind{InputKind::kControllerInput};
};

/// Transfer numerator/denominator of the single-integrator network
/// y_o / r_c = h(s) / g(s) with g = det(sI + L) and h the (o, c) entry of
/// adj(sI + L).  The leading coefficient of h is theta, the total weight of
/// the shortest c -> o paths; h = 0 and distance is empty when o is
/// unreachable.
struct SingleIntegratorTF
{
  Polynomial numerator;
  Polynomial denominator;
  std::optional<int> distance;
  double theta{0.0};
};

SingleIntegratorTF single_integrator_tf(const WeightedDigraph & g, int c, int o);

/// Gain-form transfer function
///
///   T_co = theta * phi^(1+d) * prod_i (psi + gamma_i phi)
///          / prod_i (psi + lambda_i phi)
///
/// with lambda the negated roots of g (the Laplacian eigenvalues) and gamma
/// the negated roots of h.
struct ProductFormTF
{
  AgentModel agent;
  int c{1};
  int o{1};
  double theta{0.0};
  int distance{0};
  ComplexMultiset lambda_gains;
  ComplexMultiset gamma_gains;
};

/// Throws no_path when o is unreachable from c.
ProductFormTF product_form_tf(
  const WeightedDigraph & g, int c, int o, const AgentModel & agent);

/// Multiply the product form back out.  Conjugate gain pairs are multiplied
/// as complex factors and the result demoted to real coefficients with an
/// imaginary-residue check.
RationalFunction expand_product_form(const ProductFormTF & pf);

/// One element of the series factorization: biproper
/// Z = (psi + gamma phi) / (psi + lambda phi) or strictly-proper/integrator
/// T = phi / (psi + lambda phi).  Complex gains give genuinely complex
/// coefficients; the product over all factors (times theta) is real.
struct SeriesFactor
{
  CPolynomial numerator;
  CPolynomial denominator;
  bool biproper{false};
  Complex lambda{0.0, 0.0};
  std::optional<Complex> gamma;
};

/// N - d - 1 biproper factors followed by d + 1 agent-like factors.  The
/// lambda = 0 gain always lands in an agent-like factor.
std::vector<SeriesFactor> series_factors(const ProductFormTF & pf);

/// Input-invariant network part S_co: T_co with one scalar open-loop part M
/// divided out, i.e. theta * phi^d * prod (psi + gamma phi) over the lambda
/// product without its single lambda = 0 factor.
RationalFunction network_part(const WeightedDigraph & g, int c, int o, const AgentModel & agent);

/// T = M_s * S_co, unreduced.
RationalFunction general_io_tf(const RationalFunction & network, const RationalFunction & ms);

/// (d_co + 1) * chi.
int relative_degree_co(const AgentModel & agent, int d_co);

/// theta * prod gamma / prod lambda over nonzero gains once the zero lambda
/// is cancelled against a zero gamma; +infinity when no gamma vanishes.
/// Requires at least one open-loop integrator (psi(0) = 0).
double steady_state_gain(const ProductFormTF & pf);

/// h for o = c: the characteristic polynomial det(sI + L) of L with row and
/// column c removed.
Polynomial collocated_numerator(const WeightedDigraph & g, int c);

/// h when exactly one simple path c -> o exists: path weight times
/// det(sI + L-bar) with the path vertices removed.
Polynomial one_path_numerator(const WeightedDigraph & g, int c, int o);

/// Sum of the one-path expression over all simple paths c -> o.
Polynomial multi_path_numerator(
  const WeightedDigraph & g, int c, int o, int max_paths = kDefaultPathCap);

/// Sum of single_integrator_tf numerators over a set of controlling nodes
/// driven by one shared reference.
Polynomial multi_controlling_numerator(
  const WeightedDigraph & g, const std::vector<int> & controlling, int o);

/// Kalman-style reachability data for the pair (L, e_c) with the
/// graph-theoretic lower bound max over reachable i of d_ci + 1.
struct ControllabilityReport
{
  int bound{0};
  int actual_rank{0};
  int rows{0};
  int cols{0};
  std::vector<int> unreachable;
};

ControllabilityReport controllability_report(const WeightedDigraph & g, int c);

}  // namespace netfunc

#endif  // NETFUNC__NETFUNC_HPP_
