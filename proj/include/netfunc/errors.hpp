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

#ifndef NETFUNC__ERRORS_HPP_
#define NETFUNC__ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace netfunc
{

enum class Errc {
  invalid_argument,
  invalid_schema,
  index_out_of_range,
  non_positive_weight,
  duplicate_arc,
  self_arc,
  duplicate_node,
  graph_too_large,
  path_cap_exceeded,
  no_path,
  path_not_unique,
  zero_polynomial,
  zero_numerator,
  zero_denominator,
  negative_relative_degree,
  nonreal_coefficients,
  non_conjugate_gains,
  invalid_laplacian,
  multiple_zero_eigenvalues,
  no_integrator,
  singular_sample,
  all_samples_rejected,
  verification_failed,
};

const char * errc_name(Errc code);

/// Library error carrying a machine-checkable code next to the message.
class Error : public std::runtime_error
{
public:
  Error(Errc code, const std::string & what_arg)
  : std::runtime_error(what_arg), code_(code)
  {
  }

  Errc code() const { return code_; }

private:
  Errc code_;
};

}  // namespace netfunc

#endif  // NETFUNC__ERRORS_HPP_
