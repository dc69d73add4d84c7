#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cml/graph.hpp"

namespace cml {

struct LipschitzPartitionSample {
  std::vector<std::vector<int>> clusters;  // sorted members, deterministic order
  double delta = 0.0;
  double beta_target = 0.0;  // aimed-for separation rate, ~ 2 ln(n+1) / delta
  std::vector<std::pair<int, int>> cut_similar_pairs;  // S-edges across clusters
};

struct LipschitzOptions {
  bool merge_postpass = true;  // greedily merge clusters while diameter fits
};

/// One sample of a diameter-bounded random partition of (X, rho_S): carve
/// balls of a random radius in [delta/4, delta/2] around centers in random
/// order, split carved sets into connected similarity subgraphs, then merge
/// neighbouring clusters back together while the union keeps rho_S-diameter
/// <= delta (merging only reduces cut pairs). Every cluster induces a
/// connected subgraph of G_S and has rho_S-diameter at most delta.
LipschitzPartitionSample sample_lipschitz_partition(const ConstraintGraphS& g,
                                                    double delta, std::uint64_t seed,
                                                    const LipschitzOptions& opt = {});

}  // namespace cml
