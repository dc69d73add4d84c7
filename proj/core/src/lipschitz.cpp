#include "cml/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cml/errors.hpp"
#include "cml/rng.hpp"

namespace cml {
namespace {

// Connected pieces of `members` in the similarity graph, each sorted,
// ordered by smallest member.
std::vector<std::vector<int>> split_connected(const SimpleGraph& g,
                                              const std::vector<int>& members) {
  std::vector<char> in(static_cast<std::size_t>(g.n), 0);
  for (int v : members) in[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::vector<int> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  for (int s : sorted) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adj[static_cast<std::size_t>(v)]) {
        if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

void order_by_smallest_member(std::vector<std::vector<int>>& clusters) {
  std::sort(clusters.begin(), clusters.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
}

}  // namespace

LipschitzPartitionSample sample_lipschitz_partition(const ConstraintGraphS& g,
                                                    double delta, std::uint64_t seed,
                                                    const LipschitzOptions& opt) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw InvalidParameter("lipschitz partition needs finite delta > 0");
  const int n = g.graph.n;
  LipschitzPartitionSample out;
  out.delta = delta;
  out.beta_target = 2.0 * std::log(static_cast<double>(n) + 1.0) / delta;
  if (n == 0) return out;

  Rng rng(seed);
  const double radius = rng.uniform(delta / 4.0, delta / 2.0);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<int> cluster_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> clusters;
  for (int c : order) {
    if (cluster_of[static_cast<std::size_t>(c)] >= 0) continue;
    std::vector<double> d = g.rho_from(c);
    std::vector<int> ball;
    for (int v = 0; v < n; ++v) {
      if (cluster_of[static_cast<std::size_t>(v)] < 0 &&
          d[static_cast<std::size_t>(v)] <= radius)
        ball.push_back(v);
    }
    // Earlier carvings can punch holes into the ball, so keep each connected
    // piece as its own cluster; splitting never cuts an S-edge that the ball
    // itself kept intact.
    for (auto& comp : split_connected(g.graph, ball)) {
      int id = static_cast<int>(clusters.size());
      for (int v : comp) cluster_of[static_cast<std::size_t>(v)] = id;
      clusters.push_back(std::move(comp));
    }
  }

  if (opt.merge_postpass) {
    // Greedy repair: re-join clusters connected by a cut S-edge whenever the
    // union still has rho_S-diameter <= delta. This only removes cut pairs
    // and guarantees a single cluster per component once delta dominates the
    // component diameter.
    bool merged = true;
    while (merged) {
      merged = false;
      order_by_smallest_member(clusters);
      for (std::size_t i = 0; i < clusters.size(); ++i)
        for (int v : clusters[i]) cluster_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
      for (const auto& e : g.graph.edges) {
        int ci = cluster_of[static_cast<std::size_t>(e.first)];
        int cj = cluster_of[static_cast<std::size_t>(e.second)];
        if (ci == cj) continue;
        std::vector<int> joined = clusters[static_cast<std::size_t>(ci)];
        joined.insert(joined.end(), clusters[static_cast<std::size_t>(cj)].begin(),
                      clusters[static_cast<std::size_t>(cj)].end());
        if (g.rho_diameter(joined) <= delta) {
          std::sort(joined.begin(), joined.end());
          std::size_t lo = static_cast<std::size_t>(std::min(ci, cj));
          std::size_t hi = static_cast<std::size_t>(std::max(ci, cj));
          clusters[lo] = std::move(joined);
          clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(hi));
          merged = true;
          break;
        }
      }
    }
  }

  order_by_smallest_member(clusters);
  for (std::size_t i = 0; i < clusters.size(); ++i)
    for (int v : clusters[i]) cluster_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  for (const auto& e : g.graph.edges) {
    if (cluster_of[static_cast<std::size_t>(e.first)] !=
        cluster_of[static_cast<std::size_t>(e.second)])
      out.cut_similar_pairs.push_back(e);
  }
  out.clusters = std::move(clusters);
  return out;
}

}  // namespace cml
