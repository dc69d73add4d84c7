#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace cml {

/// Edge-weighted tree with string vertex ids. Edge lengths are strictly
/// positive; `validate()` checks connectivity and the |E| = |V| - 1 count.
struct TreeMetric {
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, double>> edges;
  std::string root;

  std::size_t size() const { return vertices.size(); }

  /// Throws InvalidParameter when the structure is not a tree, an edge length
  /// is nonpositive, or the root is unknown.
  void validate() const;

  int index_of(const std::string& v) const;  // -1 if unknown

  /// Path distances from `source` to every vertex.
  std::vector<double> distances_from(const std::string& source) const;

  /// Path distance between two vertices.
  double distance(const std::string& a, const std::string& b) const;

  /// All-pairs distance matrix in `vertices` order.
  std::vector<std::vector<double>> all_pairs() const;

 private:
  void build_adjacency() const;
  mutable std::map<std::string, int> index_;
  mutable std::vector<std::vector<std::pair<int, double>>> adj_;
};

/// Full k'-ary tree of depth k whose edges all have length alpha. Vertex ids
/// encode the path from the root ("r", "r.0", "r.0.1", ...). Vertex count is
/// (k'^(k+1) - 1) / (k' - 1) for arity >= 2 and k + 1 for arity 1; exceeding
/// `vertex_budget` raises SizeBudgetExceeded.
TreeMetric canonical_tree(double alpha, int depth, int arity,
                          std::size_t vertex_budget = 1u << 20);

/// Number of vertices canonical_tree(alpha, depth, arity) would create, or
/// vertex_budget + 1 if the count overflows the budget during evaluation.
std::size_t canonical_tree_size(int depth, int arity, std::size_t vertex_budget);

}  // namespace cml
