#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cml/instance.hpp"
#include "cml/tree_metric.hpp"

namespace cml {

enum class HostKind { Line, Euclidean, Tree };

/// A placement of objects in a host space. Line hosts use coordinate vectors
/// of size 1, Euclidean hosts of size `dim`; tree hosts assign each object to
/// a vertex of `tree`.
struct Embedding {
  HostKind host = HostKind::Line;
  int dim = 1;
  std::map<std::string, std::vector<double>> coords;   // line / euclidean
  std::map<std::string, std::string> vertex_of;        // tree
  std::shared_ptr<const TreeMetric> tree;              // tree host

  static Embedding line() { return Embedding{HostKind::Line, 1, {}, {}, nullptr}; }
  static Embedding euclidean(int dim) {
    return Embedding{HostKind::Euclidean, dim, {}, {}, nullptr};
  }
  static Embedding on_tree(std::shared_ptr<const TreeMetric> t) {
    return Embedding{HostKind::Tree, 0, {}, {}, std::move(t)};
  }

  bool covers(const Instance& inst) const;

  /// Throws MissingAssignment / DimensionMismatch when the embedding does not
  /// cover the instance or coordinate sizes disagree with the host.
  void check_against(const Instance& inst) const;
};

/// Host distance between two embedded objects. Throws MissingAssignment for
/// unknown ids. Tree distances are computed per source vertex and cached in
/// `cache` when one is supplied.
class HostDistance {
 public:
  explicit HostDistance(const Embedding& emb);

  double operator()(const std::string& a, const std::string& b) const;

 private:
  const Embedding& emb_;
  // tree host: distances from each used vertex, filled on first use
  mutable std::map<std::string, std::vector<double>> tree_rows_;
};

}  // namespace cml
