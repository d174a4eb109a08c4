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

#include "netfunc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "netfunc/errors.hpp"

namespace netfunc
{

WeightedDigraph::WeightedDigraph(int node_count, std::vector<Arc> arcs)
: n_(node_count), arcs_(std::move(arcs))
{
  if (n_ < 1) {
    throw Error(Errc::invalid_argument, "node count must be at least 1");
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc & a, const Arc & b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  for (size_t i = 0; i < arcs_.size(); ++i) {
    const Arc & a = arcs_[i];
    if (a.from < 1 || a.from > n_ || a.to < 1 || a.to > n_) {
      throw Error(
        Errc::index_out_of_range,
        "arc endpoint out of range: " + std::to_string(a.from) + " -> " + std::to_string(a.to));
    }
    if (a.from == a.to) {
      throw Error(Errc::self_arc, "self arc at node " + std::to_string(a.from));
    }
    if (!(a.weight > 0.0)) {
      throw Error(
        Errc::non_positive_weight,
        "arc " + std::to_string(a.from) + " -> " + std::to_string(a.to) +
          " has non-positive weight");
    }
    if (i > 0 && arcs_[i - 1].from == a.from && arcs_[i - 1].to == a.to) {
      throw Error(
        Errc::duplicate_arc,
        "duplicate arc " + std::to_string(a.from) + " -> " + std::to_string(a.to));
    }
  }
  in_.resize(n_);
  out_.resize(n_);
  for (const Arc & a : arcs_) {
    in_[a.to - 1].push_back(a);
    out_[a.from - 1].push_back(a);
  }
  for (auto & v : in_) {
    std::sort(v.begin(), v.end(), [](const Arc & a, const Arc & b) { return a.from < b.from; });
  }
  for (auto & v : out_) {
    std::sort(v.begin(), v.end(), [](const Arc & a, const Arc & b) { return a.to < b.to; });
  }
}

namespace
{

void check_node(const WeightedDigraph & g, int v)
{
  if (v < 1 || v > g.node_count()) {
    throw Error(Errc::index_out_of_range, "node " + std::to_string(v) + " out of range");
  }
}

}  // namespace

const std::vector<Arc> & WeightedDigraph::in_arcs(int v) const
{
  check_node(*this, v);
  return in_[v - 1];
}

const std::vector<Arc> & WeightedDigraph::out_arcs(int v) const
{
  check_node(*this, v);
  return out_[v - 1];
}

Matrix WeightedDigraph::adjacency() const
{
  Matrix a(n_, n_);
  for (const Arc & arc : arcs_) {
    a(arc.to - 1, arc.from - 1) = arc.weight;
  }
  return a;
}

Matrix WeightedDigraph::laplacian() const
{
  // The diagonal accumulates the same addends (in source order) that the row
  // sum subtracts, so rows of L sum to zero exactly, not just to rounding.
  Matrix l(n_, n_);
  for (int v = 1; v <= n_; ++v) {
    double deg = 0.0;
    for (const Arc & arc : in_[v - 1]) {
      l(v - 1, arc.from - 1) = -arc.weight;
      deg += arc.weight;
    }
    l(v - 1, v - 1) = deg;
  }
  return l;
}

std::optional<int> hop_distance(const WeightedDigraph & g, int from, int to)
{
  check_node(g, from);
  check_node(g, to);
  std::vector<int> dist(g.node_count() + 1, -1);
  dist[from] = 0;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == to) {
      return dist[u];
    }
    for (const Arc & arc : g.out_arcs(u)) {
      if (dist[arc.to] < 0) {
        dist[arc.to] = dist[u] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return std::nullopt;
}

double path_weight(const WeightedDigraph & g, const std::vector<int> & vertices)
{
  if (vertices.empty()) {
    throw Error(Errc::invalid_argument, "empty vertex sequence");
  }
  double w = 1.0;
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    check_node(g, vertices[i]);
    check_node(g, vertices[i + 1]);
    bool found = false;
    for (const Arc & arc : g.out_arcs(vertices[i])) {
      if (arc.to == vertices[i + 1]) {
        w *= arc.weight;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(
        Errc::invalid_argument, "no arc " + std::to_string(vertices[i]) + " -> " +
          std::to_string(vertices[i + 1]));
    }
  }
  return w;
}

namespace
{

void path_dfs(
  const WeightedDigraph & g, int u, int target, int max_count, std::vector<char> & visited,
  std::vector<int> & stack, double weight, std::vector<Path> & out)
{
  if (u == target) {
    if (static_cast<int>(out.size()) == max_count) {
      throw Error(Errc::path_cap_exceeded, "more than " + std::to_string(max_count) + " paths");
    }
    out.push_back(Path{stack, weight});
    return;
  }
  for (const Arc & arc : g.out_arcs(u)) {
    if (visited[arc.to]) {
      continue;
    }
    visited[arc.to] = 1;
    stack.push_back(arc.to);
    path_dfs(g, arc.to, target, max_count, visited, stack, weight * arc.weight, out);
    stack.pop_back();
    visited[arc.to] = 0;
  }
}

}  // namespace

std::vector<Path> enumerate_simple_paths(
  const WeightedDigraph & g, int from, int to, int max_count)
{
  check_node(g, from);
  check_node(g, to);
  if (max_count < 1) {
    throw Error(Errc::invalid_argument, "path cap must be positive");
  }
  std::vector<Path> out;
  std::vector<char> visited(g.node_count() + 1, 0);
  std::vector<int> stack{from};
  visited[from] = 1;
  path_dfs(g, from, to, max_count, visited, stack, 1.0, out);
  return out;
}

namespace
{

struct ForestSearch
{
  const WeightedDigraph & g;
  int n;
  int target_arcs;
  // parent[v] = source of the selected in-arc of v, or 0.
  std::vector<int> parent;
  std::vector<double> parent_weight;
  std::vector<OutForest> out;

  bool acyclic() const
  {
    // color: 0 unvisited, 1 on current chain, 2 proven acyclic
    std::vector<char> color(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
      int u = v;
      std::vector<int> chain;
      while (u != 0 && color[u] == 0) {
        color[u] = 1;
        chain.push_back(u);
        u = parent[u];
      }
      if (u != 0 && color[u] == 1) {
        return false;
      }
      for (int w : chain) {
        color[w] = 2;
      }
    }
    return true;
  }

  void emit()
  {
    OutForest f;
    double w = 1.0;
    for (int v = 1; v <= n; ++v) {
      if (parent[v] != 0) {
        f.arcs.push_back(Arc{parent[v], v, parent_weight[v]});
        w *= parent_weight[v];
      } else {
        f.roots.push_back(v);
      }
    }
    f.weight = w;
    out.push_back(std::move(f));
  }

  void recurse(int v, int chosen)
  {
    if (chosen > target_arcs || chosen + (n - v + 1) < target_arcs) {
      return;
    }
    if (v > n) {
      if (chosen == target_arcs && acyclic()) {
        emit();
      }
      return;
    }
    parent[v] = 0;
    recurse(v + 1, chosen);
    for (const Arc & arc : g.in_arcs(v)) {
      parent[v] = arc.from;
      parent_weight[v] = arc.weight;
      recurse(v + 1, chosen + 1);
    }
    parent[v] = 0;
  }
};

}  // namespace

std::vector<OutForest> enumerate_out_forests(
  const WeightedDigraph & g, int arc_count, int node_cap)
{
  if (arc_count < 0) {
    throw Error(Errc::invalid_argument, "arc count must be non-negative");
  }
  if (g.node_count() > node_cap) {
    throw Error(
      Errc::graph_too_large, "forest enumeration capped at " + std::to_string(node_cap) +
        " nodes, graph has " + std::to_string(g.node_count()));
  }
  ForestSearch search{g, g.node_count(), arc_count,
    std::vector<int>(g.node_count() + 1, 0), std::vector<double>(g.node_count() + 1, 0.0), {}};
  search.recurse(1, 0);
  return std::move(search.out);
}

int forest_root(const OutForest & f, int v)
{
  int u = v;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const Arc & arc : f.arcs) {
      if (arc.to == u) {
        u = arc.from;
        moved = true;
        break;
      }
    }
  }
  return u;
}

double forest_weight(const OutForest & f)
{
  double w = 1.0;
  for (const Arc & arc : f.arcs) {
    w *= arc.weight;
  }
  return w;
}

double forest_set_weight(
  const WeightedDigraph & g, int arc_count, int root, int contains, int node_cap)
{
  check_node(g, root);
  check_node(g, contains);
  double total = 0.0;
  for (const OutForest & f : enumerate_out_forests(g, arc_count, node_cap)) {
    if (forest_root(f, contains) == root) {
      total += f.weight;
    }
  }
  return total;
}

Matrix reduced_laplacian(const WeightedDigraph & g, const std::vector<int> & removed)
{
  std::set<int> rm;
  for (int v : removed) {
    check_node(g, v);
    if (!rm.insert(v).second) {
      throw Error(Errc::duplicate_node, "node " + std::to_string(v) + " removed twice");
    }
  }
  std::vector<int> keep;
  for (int v = 1; v <= g.node_count(); ++v) {
    if (!rm.count(v)) {
      keep.push_back(v);
    }
  }
  const Matrix l = g.laplacian();
  Matrix r(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i) {
    for (size_t j = 0; j < keep.size(); ++j) {
      r(static_cast<int>(i), static_cast<int>(j)) = l(keep[i] - 1, keep[j] - 1);
    }
  }
  return r;
}

}  // namespace netfunc
