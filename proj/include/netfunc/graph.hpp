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

#ifndef NETFUNC__GRAPH_HPP_
#define NETFUNC__GRAPH_HPP_

#include <optional>
#include <vector>

#include "netfunc/matrix.hpp"

namespace netfunc
{

/// Enumerating out-forests is exponential; graphs above this node count are
/// rejected unless the caller raises the cap explicitly.
inline constexpr int kDefaultForestNodeCap = 9;

/// Cap on the number of simple paths materialized by enumeration.
inline constexpr int kDefaultPathCap = 10000;

/// Directed arc u -> v with positive weight.  Node labels are 1-based
/// everywhere in the public interface.
struct Arc
{
  int from{0};
  int to{0};
  double weight{1.0};

  bool operator==(const Arc & other) const = default;
};

/// Weighted digraph on nodes {1..n}.  An arc u -> v means v receives
/// information from u; the Laplacian row of v carries -weight in column u.
class WeightedDigraph
{
public:
  WeightedDigraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return n_; }

  /// All arcs, sorted by (from, to).
  const std::vector<Arc> & arcs() const { return arcs_; }

  /// Arcs entering v, sorted by source node.
  const std::vector<Arc> & in_arcs(int v) const;

  /// Arcs leaving v, sorted by destination node.
  const std::vector<Arc> & out_arcs(int v) const;

  /// Adjacency matrix with a[v-1][u-1] = weight of arc u -> v.
  Matrix adjacency() const;

  /// L = D - A where D is the diagonal of in-weights.  Rows sum to zero.
  Matrix laplacian() const;

private:
  int n_{0};
  std::vector<Arc> arcs_;
  std::vector<std::vector<Arc>> in_;
  std::vector<std::vector<Arc>> out_;
};

/// Simple directed path; vertices are distinct, weight is the product of
/// the arc weights (1 for a zero-length path).
struct Path
{
  std::vector<int> vertices;
  double weight{1.0};

  bool operator==(const Path & other) const = default;
};

/// Spanning diverging forest: every vertex has at most one in-arc among the
/// selected arcs and the selection is acyclic.  Roots are the vertices with
/// no selected in-arc.
struct OutForest
{
  std::vector<Arc> arcs;
  std::vector<int> roots;
  double weight{1.0};

  bool operator==(const OutForest & other) const = default;
};

/// Minimum number of arcs on a directed path from `from` to `to`;
/// std::nullopt when unreachable.  0 when from == to.
std::optional<int> hop_distance(const WeightedDigraph & g, int from, int to);

/// Product of arc weights along a vertex sequence.  Throws when a listed arc
/// does not exist.
double path_weight(const WeightedDigraph & g, const std::vector<int> & vertices);

/// All simple paths from `from` to `to` in lexicographic vertex order.
/// Throws path_cap_exceeded instead of truncating.
std::vector<Path> enumerate_simple_paths(
  const WeightedDigraph & g, int from, int to, int max_count = kDefaultPathCap);

/// All spanning diverging forests with exactly `arc_count` arcs, each one
/// emitted once, in deterministic order.
std::vector<OutForest> enumerate_out_forests(
  const WeightedDigraph & g, int arc_count, int node_cap = kDefaultForestNodeCap);

/// Root of the tree containing v, following selected in-arcs.
int forest_root(const OutForest & f, int v);

double forest_weight(const OutForest & f);

/// Total weight of forests with `arc_count` arcs whose tree rooted at `root`
/// contains `contains`.
double forest_set_weight(
  const WeightedDigraph & g, int arc_count, int root, int contains,
  int node_cap = kDefaultForestNodeCap);

/// Laplacian with the listed rows/columns removed (kept rows stay in
/// ascending node order).  Removing every node yields a 0x0 matrix.
Matrix reduced_laplacian(const WeightedDigraph & g, const std::vector<int> & removed);

}  // namespace netfunc

#endif  // NETFUNC__GRAPH_HPP_
