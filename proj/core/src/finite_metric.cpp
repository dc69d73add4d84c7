#include "cml/finite_metric.hpp"

#include <cmath>
#include <set>

#include "cml/errors.hpp"

namespace cml {

void FiniteMetric::validate(double tolerance) const {
  std::size_t n = points.size();
  if (dist.size() != n) throw InvalidParameter("distance matrix size mismatch");
  std::set<std::string> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw InvalidParameter("duplicate point id: " + p);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) throw InvalidParameter("distance matrix row size mismatch");
    if (std::fabs(dist[i][i]) > tolerance)
      throw InvalidParameter("nonzero diagonal in distance matrix");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(dist[i][j] >= -tolerance) || !std::isfinite(dist[i][j]))
        throw InvalidParameter("negative or non-finite distance");
      if (std::fabs(dist[i][j] - dist[j][i]) > tolerance)
        throw InvalidParameter("asymmetric distance matrix");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist[i][j] > dist[i][k] + dist[k][j] + tolerance)
          throw InvalidParameter("triangle inequality violated");
}

FiniteMetric FiniteMetric::from_matrix(std::vector<std::string> points,
                                       std::vector<std::vector<double>> dist) {
  FiniteMetric m;
  m.points = std::move(points);
  m.dist = std::move(dist);
  m.validate();
  return m;
}

}  // namespace cml
