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

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "netfunc/errors.hpp"
#include "netfunc/graph.hpp"
#include "netfunc/json_io.hpp"
#include "netfunc/netfunc.hpp"
#include "netfunc/poly.hpp"
#include "netfunc/spectral.hpp"
#include "netfunc/verify.hpp"

namespace
{

using netfunc::AgentModel;
using netfunc::Arc;
using netfunc::Complex;
using netfunc::ComparisonReport;
using netfunc::Errc;
using netfunc::Error;
using netfunc::Matrix;
using netfunc::OutForest;
using netfunc::Polynomial;
using netfunc::ProductFormTF;
using netfunc::RationalFunction;
using netfunc::WeightedDigraph;

using Json = nlohmann::json;

int exit_code_for(Errc code)
{
  switch (code) {
    case Errc::no_path:
      return 3;
    case Errc::graph_too_large:
    case Errc::path_cap_exceeded:
      return 4;
    case Errc::verification_failed:
      return 1;
    default:
      return 2;
  }
}

std::string fmt(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// --cap beats NETFUNC_CAP beats the built-in default.
int resolve_cap(const std::optional<int> & flag_cap)
{
  if (flag_cap.has_value()) {
    return *flag_cap;
  }
  if (const char * env = std::getenv("NETFUNC_CAP")) {
    int value = 0;
    const char * end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value < 1) {
      throw Error(Errc::invalid_argument, "NETFUNC_CAP must be a positive integer");
    }
    return value;
  }
  return netfunc::kDefaultForestNodeCap;
}

WeightedDigraph load_graph(const std::string & path)
{
  return netfunc::graph_from_json(netfunc::load_text_file(path));
}

AgentModel load_agent(const std::string & path)
{
  return netfunc::agent_from_json(netfunc::load_text_file(path));
}

int cmd_analyze(
  const std::string & graph_file, const std::string & agent_file, int from, int to,
  unsigned seed)
{
  const WeightedDigraph g = load_graph(graph_file);
  const AgentModel agent = load_agent(agent_file);
  const netfunc::AnalysisReport report =
    netfunc::build_analysis_report(g, agent, from, to, seed);
  std::cout << netfunc::analysis_report_to_json(report);
  if (!report.verified) {
    std::cerr << "error: expanded transfer function disagrees with the resolvent oracle"
              << " (max rel err " << fmt(report.verify_max_err) << ")\n";
    return 1;
  }
  return 0;
}

int cmd_freqresp(
  const std::string & graph_file, const std::string & agent_file, int from, int to,
  double w_min, double w_max, int points)
{
  if (!(w_min > 0.0) || !(w_min < w_max) || points < 2) {
    throw Error(Errc::invalid_argument, "need 0 < wmin < wmax and at least 2 points");
  }
  const WeightedDigraph g = load_graph(graph_file);
  const AgentModel agent = load_agent(agent_file);
  const ProductFormTF pf = netfunc::product_form_tf(g, from, to, agent);
  const RationalFunction tf = netfunc::expand_product_form(pf);
  const RationalFunction m = agent.open_loop();

  std::vector<Complex> grid(points);
  const double ratio = w_max / w_min;
  for (int i = 0; i < points; ++i) {
    const double w = w_min * std::pow(ratio, static_cast<double>(i) / (points - 1));
    grid[i] = Complex{0.0, w};
  }
  const std::vector<Complex> values = netfunc::eval_grid(tf, grid);

  std::string out = "omega,mag_db,phase_deg\n";
  std::vector<bool> usable(points, false);
  for (int i = 0; i < points; ++i) {
    const double w = grid[i].imag();
    const Complex den_val = tf.den.eval(grid[i]);
    const double den_scale =
      tf.den.max_abs_coeff() * std::pow(std::max(1.0, w), std::max(0, tf.den.degree()));
    const double mag = std::abs(values[i]);
    if (std::abs(den_val) <= 1e-12 * den_scale || !std::isfinite(mag) || mag == 0.0) {
      out += fmt(w) + ",,\n";
      continue;
    }
    usable[i] = true;
    const double mag_db = 20.0 * std::log10(mag);
    const double phase_deg = std::arg(values[i]) * 180.0 / std::numbers::pi;
    out += fmt(w) + "," + fmt(mag_db) + "," + fmt(phase_deg) + "\n";
  }
  std::cout << out;

  // Spot-check the expansion against the resolvent at five grid points.
  const int targets[5] = {0, points / 4, points / 2, (3 * points) / 4, points - 1};
  std::vector<bool> used(points, false);
  double max_err = 0.0;
  int checked = 0;
  for (const int target : targets) {
    for (int step = 0; step < points; ++step) {
      const int i = (target + step) % points;
      if (used[i] || !usable[i]) {
        continue;
      }
      Complex oracle;
      try {
        oracle = netfunc::resolvent_tf_eval(g, from, to, m, grid[i]);
      } catch (const Error & e) {
        if (e.code() == Errc::singular_sample) {
          continue;
        }
        throw;
      }
      used[i] = true;
      ++checked;
      max_err = std::max(
        max_err, std::abs(values[i] - oracle) / std::max(std::abs(oracle), 1e-300));
      break;
    }
  }
  if (checked > 0 && max_err > 1e-6) {
    std::cerr << "error: frequency response disagrees with the resolvent oracle"
              << " (max rel err " << fmt(max_err) << ")\n";
    return 1;
  }
  return 0;
}

void locus_rows(
  std::string & out, const Polynomial & psi, const Polynomial & phi, double k,
  const std::string & marker)
{
  const netfunc::ComplexMultiset roots =
    netfunc::poly_roots(netfunc::closed_loop_factor(psi, phi, k));
  int index = 0;
  for (const Complex root : roots) {
    out += fmt(k) + "," + std::to_string(index++) + "," + fmt(root.real()) + "," +
           fmt(root.imag()) + "," + marker + "\n";
  }
}

int cmd_rootlocus(
  const std::string & agent_file, const std::string & graph_file, int from, int to,
  bool have_pair, double k_min, double k_max, int points)
{
  if (!(k_min >= 0.0) || !(k_min < k_max) || points < 2) {
    throw Error(Errc::invalid_argument, "need 0 <= wmin < wmax and at least 2 points");
  }
  const AgentModel agent = load_agent(agent_file);
  const Polynomial psi = agent.psi();
  const Polynomial phi = agent.phi();

  std::string out = "k,root_index,re,im,marker\n";
  for (int i = 0; i < points; ++i) {
    const double k = k_min + (k_max - k_min) * static_cast<double>(i) / (points - 1);
    locus_rows(out, psi, phi, k, "");
  }

  if (!graph_file.empty()) {
    const WeightedDigraph g = load_graph(graph_file);
    netfunc::ComplexMultiset lambdas =
      netfunc::laplacian_eigenvalues(g.laplacian());
    const double scale = 1.0;
    for (const Complex lam : lambdas) {
      if (std::abs(lam.imag()) <= 1e-9 * std::max(scale, std::abs(lam))) {
        locus_rows(out, psi, phi, lam.real(), "lambda");
      }
    }
    if (have_pair) {
      const ProductFormTF pf = netfunc::product_form_tf(g, from, to, agent);
      for (const Complex gam : pf.gamma_gains) {
        if (std::abs(gam.imag()) <= 1e-9 * std::max(scale, std::abs(gam))) {
          locus_rows(out, psi, phi, gam.real(), "gamma");
        }
      }
    }
  }
  std::cout << out;
  return 0;
}

int cmd_forests(
  const std::string & graph_file, int arc_count, const std::optional<int> & root,
  const std::optional<int> & contains, const std::optional<int> & flag_cap)
{
  if (contains.has_value() && !root.has_value()) {
    throw Error(Errc::invalid_argument, "--contains requires --root");
  }
  const int cap = resolve_cap(flag_cap);
  const WeightedDigraph g = load_graph(graph_file);
  if (root.has_value() && (*root < 1 || *root > g.node_count())) {
    throw Error(Errc::index_out_of_range, "--root out of range");
  }
  if (contains.has_value() && (*contains < 1 || *contains > g.node_count())) {
    throw Error(Errc::index_out_of_range, "--contains out of range");
  }

  Json forests = Json::array();
  double set_weight = 0.0;
  for (const OutForest & f : netfunc::enumerate_out_forests(g, arc_count, cap)) {
    if (root.has_value()) {
      const int anchor = contains.value_or(*root);
      if (netfunc::forest_root(f, anchor) != *root) {
        continue;
      }
    }
    Json arcs = Json::array();
    for (const Arc & a : f.arcs) {
      arcs.push_back(Json{{"from", a.from}, {"to", a.to}, {"weight", a.weight}});
    }
    forests.push_back(Json{{"arcs", arcs}, {"roots", f.roots}, {"weight", f.weight}});
    set_weight += f.weight;
  }

  Json out{
    {"n", g.node_count()},
    {"arc_count", arc_count},
    {"count", forests.size()},
    {"forests", forests},
    {"set_weight", set_weight}};
  if (root.has_value()) {
    out["root"] = *root;
  }
  if (contains.has_value()) {
    out["contains"] = *contains;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct CheckResult
{
  std::string name;
  std::string status{"ok"};
  bool pass{true};
  double max_err{0.0};
};

CheckResult check_row_sums(const Matrix & l)
{
  CheckResult out{"laplacian_row_sums"};
  for (int i = 0; i < l.rows(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < l.cols(); ++j) {
      sum += l(i, j);
    }
    out.max_err = std::max(out.max_err, std::abs(sum));
  }
  out.pass = out.max_err <= 1e-12 * std::max(1.0, l.inf_norm());
  return out;
}

CheckResult check_charpoly_forests(
  const WeightedDigraph & g, const netfunc::ForestSeries & fl, int cap)
{
  CheckResult out{"charpoly_forest_agreement"};
  if (g.node_count() > cap) {
    out.status = "skipped: node count above enumeration cap";
    return out;
  }
  const Polynomial brute = netfunc::brute_force_char_coeffs(g, cap);
  const double scale = std::max(1.0, brute.max_abs_coeff());
  for (int i = 0; i <= g.node_count(); ++i) {
    out.max_err =
      std::max(out.max_err, std::abs(fl.char_poly.coeff(i) - brute.coeff(i)) / scale);
  }
  out.pass = out.max_err <= 1e-9;
  return out;
}

CheckResult check_adjugate_forests(
  const WeightedDigraph & g, const netfunc::ForestSeries & fl, int cap)
{
  CheckResult out{"adjugate_forest_agreement"};
  const int n = g.node_count();
  if (n > cap) {
    out.status = "skipped: node count above enumeration cap";
    return out;
  }
  for (int k = 0; k < n; ++k) {
    Matrix h(n, n);
    for (const OutForest & f : netfunc::enumerate_out_forests(g, k, cap)) {
      for (int i = 1; i <= n; ++i) {
        h(i - 1, netfunc::forest_root(f, i) - 1) += f.weight;
      }
    }
    const double scale = std::max(1.0, h.max_abs());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out.max_err = std::max(out.max_err, std::abs(fl.q[k](i, j) - h(i, j)) / scale);
      }
    }
  }
  out.pass = out.max_err <= 1e-9;
  return out;
}

CheckResult check_lemma1(const WeightedDigraph & g)
{
  CheckResult out{"lemma1_shortest_paths"};
  const int n = g.node_count();
  const Matrix l = g.laplacian();
  const Matrix a = g.adjacency();
  for (int c = 1; c <= n; ++c) {
    // walk[v] after t steps is the weight of all length-t walks c -> v; at
    // t = hop distance those walks are exactly the shortest paths.
    std::vector<double> walk(n, 0.0);
    walk[c - 1] = 1.0;
    std::vector<std::optional<int>> dist(n + 1);
    int max_d = 0;
    for (int o = 1; o <= n; ++o) {
      dist[o] = netfunc::hop_distance(g, c, o);
      max_d = std::max(max_d, dist[o].value_or(0));
    }
    for (int t = 0; t <= max_d; ++t) {
      for (int o = 1; o <= n; ++o) {
        if (!dist[o].has_value()) {
          continue;
        }
        const int d = *dist[o];
        if (t < d) {
          out.max_err =
            std::max(out.max_err, std::abs(netfunc::laplacian_power_entry(l, t, o, c)));
        } else if (t == d) {
          const double sign = d % 2 == 0 ? 1.0 : -1.0;
          const double via_l = sign * netfunc::laplacian_power_entry(l, d, o, c);
          const double theta = walk[o - 1];
          out.max_err =
            std::max(out.max_err, std::abs(via_l - theta) / std::max(1.0, std::abs(theta)));
        }
      }
      walk = netfunc::matvec(a, walk);
    }
  }
  out.pass = out.max_err <= 1e-9;
  return out;
}

CheckResult check_theorem1(
  const WeightedDigraph & g, const AgentModel & agent, unsigned seed)
{
  CheckResult out{"theorem1_product_form"};
  const RationalFunction m = agent.open_loop();
  const int n = g.node_count();
  int pair_index = 0;
  for (int c = 1; c <= n && pair_index < 64; ++c) {
    for (int o = 1; o <= n && pair_index < 64; ++o) {
      if (!netfunc::hop_distance(g, c, o).has_value()) {
        continue;
      }
      const RationalFunction tf =
        netfunc::expand_product_form(netfunc::product_form_tf(g, c, o, agent));
      const ComparisonReport rep =
        netfunc::compare_tf(tf, g, c, o, m, 8, 1e-8, seed + static_cast<unsigned>(pair_index));
      out.max_err = std::max(out.max_err, rep.max_err);
      if (!rep.pass) {
        out.pass = false;
      }
      ++pair_index;
    }
  }
  return out;
}

double poly_rel_distance(const Polynomial & a, const Polynomial & b)
{
  const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
  double err = 0.0;
  for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i) {
    err = std::max(err, std::abs(a.coeff(i) - b.coeff(i)) / scale);
  }
  return err;
}

CheckResult check_theorem3(const WeightedDigraph & g)
{
  CheckResult out{"theorem3_unique_path"};
  const int n = g.node_count();
  for (int c = 1; c <= n; ++c) {
    for (int o = 1; o <= n; ++o) {
      const Polynomial h = netfunc::single_integrator_tf(g, c, o).numerator;
      if (c == o) {
        out.max_err =
          std::max(out.max_err, poly_rel_distance(h, netfunc::collocated_numerator(g, c)));
        continue;
      }
      try {
        if (netfunc::enumerate_simple_paths(g, c, o).size() == 1) {
          out.max_err =
            std::max(out.max_err, poly_rel_distance(h, netfunc::one_path_numerator(g, c, o)));
        }
      } catch (const Error & e) {
        if (e.code() != Errc::path_cap_exceeded) {
          throw;
        }
        out.status = "ok (some pairs above path cap)";
      }
    }
  }
  out.pass = out.max_err <= 1e-9;
  return out;
}

CheckResult check_theorem4(const WeightedDigraph & g)
{
  CheckResult out{"theorem4_path_sum"};
  const int n = g.node_count();
  for (int c = 1; c <= n; ++c) {
    for (int o = 1; o <= n; ++o) {
      if (c == o || !netfunc::hop_distance(g, c, o).has_value()) {
        continue;
      }
      try {
        const Polynomial via_paths = netfunc::multi_path_numerator(g, c, o);
        const Polynomial h = netfunc::single_integrator_tf(g, c, o).numerator;
        out.max_err = std::max(out.max_err, poly_rel_distance(h, via_paths));
      } catch (const Error & e) {
        if (e.code() != Errc::path_cap_exceeded) {
          throw;
        }
        out.status = "ok (some pairs above path cap)";
      }
    }
  }
  out.pass = out.max_err <= 1e-9;
  return out;
}

CheckResult check_theorem5(const WeightedDigraph & g)
{
  CheckResult out{"theorem5_controllability_bound"};
  for (int c = 1; c <= g.node_count(); ++c) {
    const netfunc::ControllabilityReport rep = netfunc::controllability_report(g, c);
    if (rep.actual_rank < rep.bound) {
      out.pass = false;
      out.max_err = std::max(out.max_err, static_cast<double>(rep.bound - rep.actual_rank));
    }
  }
  return out;
}

CheckResult check_eigensum(const WeightedDigraph & g)
{
  CheckResult out{"eigensum_identity"};
  const int n = g.node_count();
  int skipped = 0;
  int total = 0;
  for (int c = 1; c <= n; ++c) {
    for (int o = 1; o <= n; ++o) {
      const ComparisonReport rep = netfunc::eigensum_identity_check(g, c, o, n);
      ++total;
      if (rep.status.rfind("skipped", 0) == 0) {
        ++skipped;
        continue;
      }
      out.max_err = std::max(out.max_err, rep.max_err);
      if (!rep.pass) {
        out.pass = false;
      }
    }
  }
  if (skipped == total) {
    out.status = "skipped: eigenvector condition exceeds limit";
  } else if (skipped > 0) {
    out.status = "ok (ill-conditioned pairs skipped)";
  }
  return out;
}

int cmd_verify(
  const std::string & graph_file, const std::string & agent_file, unsigned seed,
  const std::optional<int> & flag_cap, bool corrupt)
{
  const int cap = resolve_cap(flag_cap);
  const WeightedDigraph g = load_graph(graph_file);
  const AgentModel agent = load_agent(agent_file);

  Matrix l = g.laplacian();
  if (corrupt) {
    l(0, 0) += 0.1;
  }
  const netfunc::ForestSeries fl = netfunc::faddeev_leverrier(l);

  std::vector<CheckResult> checks;
  checks.push_back(check_row_sums(l));
  checks.push_back(check_charpoly_forests(g, fl, cap));
  checks.push_back(check_adjugate_forests(g, fl, cap));
  checks.push_back(check_lemma1(g));
  checks.push_back(check_theorem1(g, agent, seed));
  checks.push_back(check_theorem3(g));
  checks.push_back(check_theorem4(g));
  checks.push_back(check_theorem5(g));
  checks.push_back(check_eigensum(g));

  bool pass = true;
  Json list = Json::array();
  for (const CheckResult & c : checks) {
    list.push_back(Json{
      {"name", c.name}, {"status", c.status}, {"pass", c.pass}, {"max_err", c.max_err}});
    if (!c.pass) {
      pass = false;
      std::cerr << "check failed: " << c.name << " (max err " << fmt(c.max_err) << ")\n";
    }
  }
  const Json report{{"seed", seed}, {"checks", list}, {"pass", pass}};
  std::cout << report.dump(2) << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Transfer functions of consensus networks of identical SISO agents"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string agent_file;
  int from = 1;
  int to = 1;
  unsigned seed = 12345;
  double fr_wmin = 0.01;
  double fr_wmax = 100.0;
  int fr_points = 200;
  double rl_kmin = 0.0;
  double rl_kmax = 10.0;
  int rl_points = 100;
  int arc_count = 0;
  std::optional<int> root;
  std::optional<int> contains;
  std::optional<int> cap;
  bool corrupt = false;

  CLI::App * analyze = app.add_subcommand("analyze", "Product-form analysis of one (c, o) pair");
  analyze->add_option("--graph", graph_file, "graph JSON file")->required();
  analyze->add_option("--agent", agent_file, "agent JSON file")->required();
  analyze->add_option("--from", from, "controlled node c")->required();
  analyze->add_option("--to", to, "observed node o")->required();
  analyze->add_option("--seed", seed, "verification sample seed");

  CLI::App * freqresp = app.add_subcommand("freqresp", "Frequency response CSV");
  freqresp->add_option("--graph", graph_file, "graph JSON file")->required();
  freqresp->add_option("--agent", agent_file, "agent JSON file")->required();
  freqresp->add_option("--from", from, "controlled node c")->required();
  freqresp->add_option("--to", to, "observed node o")->required();
  freqresp->add_option("--wmin", fr_wmin, "lowest frequency, rad/s")->capture_default_str();
  freqresp->add_option("--wmax", fr_wmax, "highest frequency, rad/s")->capture_default_str();
  freqresp->add_option("--points", fr_points, "grid size")->capture_default_str();

  CLI::App * rootlocus = app.add_subcommand("rootlocus", "Root locus CSV of psi + k phi");
  rootlocus->add_option("--agent", agent_file, "agent JSON file")->required();
  rootlocus->add_option("--graph", graph_file, "graph JSON file, adds lambda markers");
  CLI::Option * rl_from = rootlocus->add_option("--from", from, "controlled node c");
  CLI::Option * rl_to = rootlocus->add_option("--to", to, "observed node o");
  rootlocus->add_option("--wmin", rl_kmin, "lowest gain")->capture_default_str();
  rootlocus->add_option("--wmax", rl_kmax, "highest gain")->capture_default_str();
  rootlocus->add_option("--points", rl_points, "grid size")->capture_default_str();
  rl_from->needs(rl_to, rootlocus->get_option("--graph"));
  rl_to->needs(rl_from, rootlocus->get_option("--graph"));

  CLI::App * forests = app.add_subcommand("forests", "Enumerate spanning diverging forests");
  forests->add_option("--graph", graph_file, "graph JSON file")->required();
  forests->add_option("--arcs", arc_count, "number of arcs per forest")->required();
  forests->add_option("--root", root, "keep forests where this node is a root");
  forests->add_option("--contains", contains, "tree rooted at --root must contain this node");
  forests->add_option("--cap", cap, "enumeration node cap");

  CLI::App * verify = app.add_subcommand("verify", "Cross-route verification suite");
  verify->add_option("--graph", graph_file, "graph JSON file")->required();
  verify->add_option("--agent", agent_file, "agent JSON file")->required();
  verify->add_option("--seed", seed, "sample seed");
  verify->add_option("--cap", cap, "enumeration node cap");
  verify->add_flag("--corrupt", corrupt, "perturb the Laplacian before the spectral checks")
    ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(graph_file, agent_file, from, to, seed);
    }
    if (app.got_subcommand(freqresp)) {
      return cmd_freqresp(graph_file, agent_file, from, to, fr_wmin, fr_wmax, fr_points);
    }
    if (app.got_subcommand(rootlocus)) {
      const bool have_pair = rl_from->count() > 0;
      return cmd_rootlocus(
        agent_file, graph_file, from, to, have_pair, rl_kmin, rl_kmax, rl_points);
    }
    if (app.got_subcommand(forests)) {
      return cmd_forests(graph_file, arc_count, root, contains, cap);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(graph_file, agent_file, seed, cap, corrupt);
    }
  } catch (const Error & e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
