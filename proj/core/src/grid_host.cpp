#include "cml/grid_host.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cml/errors.hpp"

namespace cml {
namespace {

long long isqrt_floor(double x) {
  if (x < 0.0) return -1;
  long long r = static_cast<long long>(std::sqrt(x));
  while ((r + 1) * (r + 1) <= static_cast<long long>(x)) ++r;
  while (r > 0 && r * r > static_cast<long long>(x)) --r;
  return r;
}

}  // namespace

GridHost discretize_ball(double delta, int dim, double eps_prime, double u, double l,
                         std::size_t point_budget) {
  if (dim < 1) throw InvalidParameter("grid dimension must be >= 1");
  if (!(eps_prime > 0.0) || !std::isfinite(eps_prime))
    throw InvalidParameter("grid needs eps_prime > 0");
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw InvalidParameter("grid needs finite delta >= 0");
  const double scale = std::min(u, l);
  if (!(scale > 0.0)) throw InvalidParameter("grid spacing would be zero: min(u, l) must be > 0");
  if (point_budget == 0) throw PointBudgetExceeded("grid point budget is zero");

  GridHost out;
  out.spacing = eps_prime / (2.0 * std::sqrt(static_cast<double>(dim))) * scale;
  out.radius = 2.0 * delta;

  const double q = out.radius / out.spacing;
  // Integer-lattice membership test: |z|^2 <= bound, with a 1e-12 relative
  // slack so exact boundary points survive float rounding.
  const long long bound = static_cast<long long>(std::floor(q * q * (1.0 + 2e-12) + 1e-9));
  const long long m = isqrt_floor(static_cast<double>(bound));
  if (m < 0) throw InvalidParameter("grid radius underflow");
  // The axis through the origin alone contributes 2m+1 points.
  if (2 * m + 1 > static_cast<long long>(point_budget))
    throw PointBudgetExceeded("grid would need at least " + std::to_string(2 * m + 1) +
                              " points for budget " + std::to_string(point_budget));

  std::vector<std::vector<long long>> lattice;
  std::vector<long long> z(static_cast<std::size_t>(dim), 0);
  // Depth-first odometer in lexicographic coordinate order; each axis range
  // shrinks with the squared norm already spent, so work stays near the
  // number of emitted points.
  auto walk = [&](auto&& self, int axis, long long used) -> void {
    long long rem = bound - used;
    long long t_max = isqrt_floor(static_cast<double>(rem));
    if (axis == dim - 1) {
      for (long long t = -t_max; t <= t_max; ++t) {
        z[static_cast<std::size_t>(axis)] = t;
        if (lattice.size() == point_budget)
          throw PointBudgetExceeded("grid exceeds point budget " + std::to_string(point_budget));
        lattice.push_back(z);
      }
      return;
    }
    for (long long t = -t_max; t <= t_max; ++t) {
      z[static_cast<std::size_t>(axis)] = t;
      self(self, axis + 1, used + t * t);
    }
  };
  walk(walk, 0, 0);

  const std::size_t k = lattice.size();
  out.coords.resize(k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = "g" + std::to_string(i);
    out.coords[i].resize(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a)
      out.coords[i][static_cast<std::size_t>(a)] =
          out.spacing * static_cast<double>(lattice[i][static_cast<std::size_t>(a)]);
  }
  out.metric.points = std::move(names);
  out.metric.dist.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      long long sq = 0;
      for (int a = 0; a < dim; ++a) {
        long long dz = lattice[i][static_cast<std::size_t>(a)] - lattice[j][static_cast<std::size_t>(a)];
        sq += dz * dz;
      }
      double d = out.spacing * std::sqrt(static_cast<double>(sq));
      out.metric.dist[i][j] = d;
      out.metric.dist[j][i] = d;
    }
  }
  return out;
}

}  // namespace cml
