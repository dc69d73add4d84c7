#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cml/instance.hpp"

namespace cml {

/// Undirected graph over vertices 0..n-1 with unit capacities. Parallel edges
/// and self loops are not allowed.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  std::vector<std::vector<int>> adj;

  static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

  bool has_edge(int a, int b) const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  /// Hop distances from `source`; unreachable vertices get -1.
  std::vector<int> bfs_hops(int source) const;
};

/// The similarity graph G_S of an instance together with its shortest-path
/// metric rho_S (every S-edge has length u). Vertices are sorted-id indices.
struct ConstraintGraphS {
  std::vector<std::string> ids;  // sorted object ids; vertex i <-> ids[i]
  double u = 0.0;
  SimpleGraph graph;

  static constexpr double kUnreachable = std::numeric_limits<double>::infinity();

  static ConstraintGraphS build(const Instance& inst);

  /// rho_S distances from vertex `source` (u per hop); infinity across
  /// components.
  std::vector<double> rho_from(int source) const;

  /// Largest rho_S distance inside a vertex subset (0 for singletons). The
  /// subset must lie in one component, otherwise the result is infinity.
  double rho_diameter(const std::vector<int>& subset) const;

  /// Components as sorted vertex lists, ordered by smallest member.
  std::vector<std::vector<int>> components() const { return graph.components(); }
};

}  // namespace cml
