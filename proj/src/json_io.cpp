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

#include "netfunc/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "netfunc/errors.hpp"

namespace netfunc
{

namespace
{

using Json = nlohmann::json;

Json parse_text(const std::string & text)
{
  try {
    return Json::parse(text);
  } catch (const Json::parse_error & e) {
    throw Error(Errc::invalid_schema, e.what());
  }
}

void check_keys(const Json & j, std::initializer_list<const char *> allowed)
{
  for (const auto & item : j.items()) {
    bool found = false;
    for (const char * key : allowed) {
      if (item.key() == key) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(Errc::invalid_schema, "unexpected key '" + item.key() + "'");
    }
  }
}

const Json & require(const Json & j, const char * key)
{
  const auto it = j.find(key);
  if (it == j.end()) {
    throw Error(Errc::invalid_schema, std::string("missing key '") + key + "'");
  }
  return *it;
}

int require_int(const Json & j, const char * what)
{
  if (!j.is_number_integer()) {
    throw Error(Errc::invalid_schema, std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

double require_number(const Json & j, const char * what)
{
  if (!j.is_number()) {
    throw Error(Errc::invalid_schema, std::string(what) + " must be a number");
  }
  return j.get<double>();
}

bool require_bool(const Json & j, const char * what)
{
  if (!j.is_boolean()) {
    throw Error(Errc::invalid_schema, std::string(what) + " must be a boolean");
  }
  return j.get<bool>();
}

std::string require_string(const Json & j, const char * what)
{
  if (!j.is_string()) {
    throw Error(Errc::invalid_schema, std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

std::vector<double> number_list(const Json & j, const char * what)
{
  if (!j.is_array()) {
    throw Error(Errc::invalid_schema, std::string(what) + " must be an array");
  }
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json & v : j) {
    out.push_back(require_number(v, what));
  }
  return out;
}

Complex complex_pair(const Json & j, const char * what)
{
  if (!j.is_array() || j.size() != 2) {
    throw Error(Errc::invalid_schema, std::string(what) + " must be a [re, im] pair");
  }
  return {require_number(j[0], what), require_number(j[1], what)};
}

Json complex_to_json(Complex z)
{
  return Json::array({z.real(), z.imag()});
}

std::vector<Complex> complex_list(const Json & j, const char * what)
{
  if (!j.is_array()) {
    throw Error(Errc::invalid_schema, std::string(what) + " must be an array");
  }
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const Json & v : j) {
    out.push_back(complex_pair(v, what));
  }
  return out;
}

Json poly_to_value(const Polynomial & p)
{
  return Json(p.coeffs());
}

Polynomial poly_from_value(const Json & j, const char * what)
{
  return Polynomial(number_list(j, what));
}

Json rational_to_value(const RationalFunction & r)
{
  return Json{{"num", poly_to_value(r.num)}, {"den", poly_to_value(r.den)}};
}

RationalFunction rational_from_value(const Json & j, const char * what)
{
  if (!j.is_object()) {
    throw Error(Errc::invalid_schema, std::string(what) + " must be an object");
  }
  check_keys(j, {"num", "den"});
  return RationalFunction(
    poly_from_value(require(j, "num"), "num coefficient"),
    poly_from_value(require(j, "den"), "den coefficient"));
}

std::string dump(const Json & j)
{
  return j.dump(2) + "\n";
}

}  // namespace

std::string load_text_file(const std::string & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::invalid_argument, "cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

WeightedDigraph graph_from_json(const std::string & text)
{
  const Json j = parse_text(text);
  if (!j.is_object()) {
    throw Error(Errc::invalid_schema, "graph must be an object");
  }
  check_keys(j, {"n", "arcs"});
  const int n = require_int(require(j, "n"), "n");
  const Json & arcs_json = require(j, "arcs");
  if (!arcs_json.is_array()) {
    throw Error(Errc::invalid_schema, "arcs must be an array");
  }
  std::vector<Arc> arcs;
  arcs.reserve(arcs_json.size());
  for (const Json & a : arcs_json) {
    if (!a.is_object()) {
      throw Error(Errc::invalid_schema, "arc must be an object");
    }
    check_keys(a, {"from", "to", "weight"});
    Arc arc;
    arc.from = require_int(require(a, "from"), "from");
    arc.to = require_int(require(a, "to"), "to");
    if (a.contains("weight")) {
      arc.weight = require_number(a["weight"], "weight");
    }
    arcs.push_back(arc);
  }
  return WeightedDigraph(n, std::move(arcs));
}

std::string graph_to_json(const WeightedDigraph & g)
{
  Json arcs = Json::array();
  for (const Arc & a : g.arcs()) {
    arcs.push_back(Json{{"from", a.from}, {"to", a.to}, {"weight", a.weight}});
  }
  return dump(Json{{"n", g.node_count()}, {"arcs", arcs}});
}

Polynomial polynomial_from_json(const std::string & text)
{
  return poly_from_value(parse_text(text), "coefficient");
}

std::string polynomial_to_json(const Polynomial & p)
{
  return dump(poly_to_value(p));
}

RationalFunction rational_from_json(const std::string & text)
{
  return rational_from_value(parse_text(text), "rational function");
}

std::string rational_to_json(const RationalFunction & r)
{
  return dump(rational_to_value(r));
}

AgentModel agent_from_json(const std::string & text)
{
  const Json j = parse_text(text);
  if (!j.is_object()) {
    throw Error(Errc::invalid_schema, "agent must be an object");
  }
  check_keys(j, {"plant", "controller"});
  return AgentModel(
    rational_from_value(require(j, "plant"), "plant"),
    rational_from_value(require(j, "controller"), "controller"));
}

std::string agent_to_json(const AgentModel & agent)
{
  return dump(Json{
    {"plant", rational_to_value(agent.plant)},
    {"controller", rational_to_value(agent.controller)}});
}

std::string comparison_report_to_json(const ComparisonReport & report)
{
  Json samples = Json::array();
  for (const SampleComparison & s : report.samples) {
    samples.push_back(Json{
      {"s", complex_to_json(s.s)},
      {"candidate", complex_to_json(s.candidate)},
      {"oracle", complex_to_json(s.oracle)},
      {"rel_err", s.rel_err}});
  }
  return dump(Json{
    {"samples", samples},
    {"max_err", report.max_err},
    {"tolerance", report.tolerance},
    {"pass", report.pass},
    {"seed", report.seed},
    {"status", report.status}});
}

ComparisonReport comparison_report_from_json(const std::string & text)
{
  const Json j = parse_text(text);
  if (!j.is_object()) {
    throw Error(Errc::invalid_schema, "report must be an object");
  }
  check_keys(j, {"samples", "max_err", "tolerance", "pass", "seed", "status"});
  ComparisonReport report;
  const Json & samples = require(j, "samples");
  if (!samples.is_array()) {
    throw Error(Errc::invalid_schema, "samples must be an array");
  }
  for (const Json & s : samples) {
    if (!s.is_object()) {
      throw Error(Errc::invalid_schema, "sample must be an object");
    }
    check_keys(s, {"s", "candidate", "oracle", "rel_err"});
    SampleComparison sample;
    sample.s = complex_pair(require(s, "s"), "s");
    sample.candidate = complex_pair(require(s, "candidate"), "candidate");
    sample.oracle = complex_pair(require(s, "oracle"), "oracle");
    sample.rel_err = require_number(require(s, "rel_err"), "rel_err");
    report.samples.push_back(sample);
  }
  report.max_err = require_number(require(j, "max_err"), "max_err");
  report.tolerance = require_number(require(j, "tolerance"), "tolerance");
  report.pass = require_bool(require(j, "pass"), "pass");
  report.seed = static_cast<unsigned>(require_int(require(j, "seed"), "seed"));
  report.status = require_string(require(j, "status"), "status");
  return report;
}

AnalysisReport build_analysis_report(
  const WeightedDigraph & g, const AgentModel & agent, int from, int to, unsigned seed)
{
  AnalysisReport report;
  report.node_count = g.node_count();
  report.arc_count = static_cast<int>(g.arcs().size());
  report.from = from;
  report.to = to;

  const ProductFormTF pf = product_form_tf(g, from, to, agent);
  report.theta = pf.theta;
  report.distance = pf.distance;
  report.lambda = pf.lambda_gains;
  report.gamma = pf.gamma_gains;

  const RationalFunction expanded = expand_product_form(pf);
  report.num = expanded.num.coeffs();
  report.den = expanded.den.coeffs();
  report.relative_degree = relative_degree_co(agent, pf.distance);

  try {
    const double gain = steady_state_gain(pf);
    if (std::isinf(gain)) {
      report.gain_kind = "infinite";
    } else {
      report.gain_kind = "finite";
      report.gain_value = gain;
    }
  } catch (const Error & e) {
    if (e.code() != Errc::no_integrator) {
      throw;
    }
    // No integrator in the loop: T(0) is a plain evaluation.
    const double num0 = expanded.num.coeff(0);
    const double den0 = expanded.den.coeff(0);
    if (std::abs(den0) > 1e-12 * std::max(1.0, expanded.den.max_abs_coeff())) {
      report.gain_kind = "finite";
      report.gain_value = num0 / den0;
    } else if (std::abs(num0) > 1e-12 * std::max(1.0, expanded.num.max_abs_coeff())) {
      report.gain_kind = "infinite";
    } else {
      report.gain_kind = "undefined";
    }
  }

  const ControllabilityReport ctrb = controllability_report(g, from);
  report.controllability_bound = ctrb.bound;
  report.controllability_rank = ctrb.actual_rank;
  report.unreachable = ctrb.unreachable;

  const ComparisonReport check =
    compare_tf(expanded, g, from, to, agent.open_loop(), 32, 1e-8, seed);
  report.verified = check.pass;
  report.verify_max_err = check.max_err;
  report.verify_seed = check.seed;
  return report;
}

std::string analysis_report_to_json(const AnalysisReport & report)
{
  Json lambda = Json::array();
  for (Complex z : report.lambda) {
    lambda.push_back(complex_to_json(z));
  }
  Json gamma = Json::array();
  for (Complex z : report.gamma) {
    gamma.push_back(complex_to_json(z));
  }
  Json gain{{"kind", report.gain_kind}};
  if (report.gain_kind == "finite") {
    gain["value"] = report.gain_value;
  }
  return dump(Json{
    {"graph", Json{{"n", report.node_count}, {"arcs", report.arc_count}}},
    {"from", report.from},
    {"to", report.to},
    {"theta", report.theta},
    {"distance", report.distance},
    {"lambda", lambda},
    {"gamma", gamma},
    {"num", report.num},
    {"den", report.den},
    {"relative_degree", report.relative_degree},
    {"gain", gain},
    {"controllability",
     Json{
       {"bound", report.controllability_bound},
       {"rank", report.controllability_rank},
       {"unreachable", report.unreachable}}},
    {"verification",
     Json{
       {"pass", report.verified},
       {"max_err", report.verify_max_err},
       {"seed", report.verify_seed}}}});
}

AnalysisReport analysis_report_from_json(const std::string & text)
{
  const Json j = parse_text(text);
  if (!j.is_object()) {
    throw Error(Errc::invalid_schema, "analysis report must be an object");
  }
  check_keys(
    j, {"graph", "from", "to", "theta", "distance", "lambda", "gamma", "num", "den",
        "relative_degree", "gain", "controllability", "verification"});
  AnalysisReport report;
  const Json & graph = require(j, "graph");
  check_keys(graph, {"n", "arcs"});
  report.node_count = require_int(require(graph, "n"), "n");
  report.arc_count = require_int(require(graph, "arcs"), "arcs");
  report.from = require_int(require(j, "from"), "from");
  report.to = require_int(require(j, "to"), "to");
  report.theta = require_number(require(j, "theta"), "theta");
  report.distance = require_int(require(j, "distance"), "distance");
  report.lambda = complex_list(require(j, "lambda"), "lambda");
  report.gamma = complex_list(require(j, "gamma"), "gamma");
  report.num = number_list(require(j, "num"), "num");
  report.den = number_list(require(j, "den"), "den");
  report.relative_degree = require_int(require(j, "relative_degree"), "relative_degree");
  const Json & gain = require(j, "gain");
  check_keys(gain, {"kind", "value"});
  report.gain_kind = require_string(require(gain, "kind"), "gain kind");
  if (gain.contains("value")) {
    report.gain_value = require_number(gain["value"], "gain value");
  }
  const Json & ctrb = require(j, "controllability");
  check_keys(ctrb, {"bound", "rank", "unreachable"});
  report.controllability_bound = require_int(require(ctrb, "bound"), "bound");
  report.controllability_rank = require_int(require(ctrb, "rank"), "rank");
  const Json & unreachable = require(ctrb, "unreachable");
  if (!unreachable.is_array()) {
    throw Error(Errc::invalid_schema, "unreachable must be an array");
  }
  for (const Json & v : unreachable) {
    report.unreachable.push_back(require_int(v, "unreachable node"));
  }
  const Json & verification = require(j, "verification");
  check_keys(verification, {"pass", "max_err", "seed"});
  report.verified = require_bool(require(verification, "pass"), "pass");
  report.verify_max_err = require_number(require(verification, "max_err"), "max_err");
  report.verify_seed =
    static_cast<unsigned>(require_int(require(verification, "seed"), "seed"));
  return report;
}

}  // namespace netfunc
