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

#ifndef NETFUNC__JSON_IO_HPP_
#define NETFUNC__JSON_IO_HPP_

#include <string>
#include <vector>

#include "netfunc/graph.hpp"
#include "netfunc/netfunc.hpp"
#include "netfunc/poly.hpp"
#include "netfunc/verify.hpp"

namespace netfunc
{

/// Whole-file read; throws invalid_argument when the file cannot be opened.
std::string load_text_file(const std::string & path);

/// Graph file: {"n": 5, "arcs": [{"from":1,"to":2,"weight":1.0}, ...]}.
/// Omitted weight defaults to 1.0.  Unknown or mistyped keys are rejected.
WeightedDigraph graph_from_json(const std::string & text);
std::string graph_to_json(const WeightedDigraph & g);

/// Polynomial: [c0, c1, ...] ascending.  Rational: {"num":[...],"den":[...]}.
Polynomial polynomial_from_json(const std::string & text);
std::string polynomial_to_json(const Polynomial & p);
RationalFunction rational_from_json(const std::string & text);
std::string rational_to_json(const RationalFunction & r);

/// Agent file: {"plant":{"num":[...],"den":[...]},
///              "controller":{"num":[...],"den":[...]}}.
AgentModel agent_from_json(const std::string & text);
std::string agent_to_json(const AgentModel & agent);

std::string comparison_report_to_json(const ComparisonReport & report);
ComparisonReport comparison_report_from_json(const std::string & text);

/// Everything cmd_analyze prints.  Doubles survive the JSON round trip
/// bit-exactly, so parse(serialize(r)) == r.
struct AnalysisReport
{
  int node_count{0};
  int arc_count{0};
  int from{0};
  int to{0};
  double theta{0.0};
  int distance{0};
  std::vector<Complex> lambda;
  std::vector<Complex> gamma;
  std::vector<double> num;
  std::vector<double> den;
  int relative_degree{0};
  std::string gain_kind;
  double gain_value{0.0};
  int controllability_bound{0};
  int controllability_rank{0};
  std::vector<int> unreachable;
  bool verified{false};
  double verify_max_err{0.0};
  unsigned verify_seed{0};

  bool operator==(const AnalysisReport & other) const = default;
};

/// Full analysis of the pair (c, o) = (from, to): product form, expansion,
/// steady-state gain, controllability, and a point-wise check of the
/// expansion against the resolvent oracle.  Throws no_path when o is
/// unreachable from c.
AnalysisReport build_analysis_report(
  const WeightedDigraph & g, const AgentModel & agent, int from, int to,
  unsigned seed = 12345);

std::string analysis_report_to_json(const AnalysisReport & report);
AnalysisReport analysis_report_from_json(const std::string & text);

}  // namespace netfunc

#endif  // NETFUNC__JSON_IO_HPP_
