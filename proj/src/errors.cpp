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

#include "netfunc/errors.hpp"

namespace netfunc
{

const char * errc_name(Errc code)
{
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::invalid_schema: return "invalid schema";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::non_positive_weight: return "non-positive weight";
    case Errc::duplicate_arc: return "duplicate arc";
    case Errc::self_arc: return "self arc";
    case Errc::duplicate_node: return "duplicate node";
    case Errc::graph_too_large: return "graph too large for enumeration";
    case Errc::path_cap_exceeded: return "path count exceeds cap";
    case Errc::no_path: return "no path";
    case Errc::path_not_unique: return "path not unique";
    case Errc::zero_polynomial: return "zero polynomial";
    case Errc::zero_numerator: return "zero numerator";
    case Errc::zero_denominator: return "zero denominator";
    case Errc::negative_relative_degree: return "negative relative degree";
    case Errc::nonreal_coefficients: return "nonreal coefficients";
    case Errc::non_conjugate_gains: return "non-conjugate complex gains";
    case Errc::invalid_laplacian: return "invalid laplacian spectrum";
    case Errc::multiple_zero_eigenvalues: return "multiple zero eigenvalues";
    case Errc::no_integrator: return "no integrator in open loop";
    case Errc::singular_sample: return "singular at sample point";
    case Errc::all_samples_rejected: return "all samples rejected";
    case Errc::verification_failed: return "verification failed";
  }
  return "unknown error";
}

}  // namespace netfunc
