#pragma once

#include <string>
#include <vector>

namespace cml {

/// Finite metric space: named points and a symmetric distance matrix with
/// zero diagonal satisfying the triangle inequality (checked by validate()
/// with a small absolute slack for rounded decimals).
struct FiniteMetric {
  std::vector<std::string> points;
  std::vector<std::vector<double>> dist;

  std::size_t size() const { return points.size(); }
  double operator()(std::size_t i, std::size_t j) const { return dist[i][j]; }

  void validate(double tolerance = 1e-9) const;

  /// Builds the vertex metric of an edge-weighted tree / point set helper.
  static FiniteMetric from_matrix(std::vector<std::string> points,
                                  std::vector<std::vector<double>> dist);
};

}  // namespace cml
