#pragma once

#include <cstddef>
#include <vector>

#include "cml/finite_metric.hpp"

namespace cml {

struct GridHost {
  double spacing = 0.0;                       // lattice step c1
  double radius = 0.0;                        // ball radius (2 * delta)
  std::vector<std::vector<double>> coords;    // one coordinate vector per point
  FiniteMetric metric;                        // Euclidean distances, points "g0".."gK"
};

/// Finite net for a Euclidean ball: the scaled integer lattice with spacing
/// c1 = (eps_prime / (2 sqrt(d))) * min(u, l), intersected with the radius
/// 2*delta ball around the origin. Points are emitted in lexicographic order
/// of their integer coordinates, so any point of the ball rounds to a net
/// point at distance <= sqrt(d) * c1. Throws PointBudgetExceeded when the
/// net would need more than point_budget points.
GridHost discretize_ball(double delta, int dim, double eps_prime, double u, double l,
                         std::size_t point_budget);

}  // namespace cml
