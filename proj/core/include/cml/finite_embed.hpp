#pragma once

#include <cstdint>
#include <vector>

#include "cml/finite_metric.hpp"
#include "cml/instance.hpp"
#include "cml/pseudoregular.hpp"

namespace cml {

/// Count table over (refinement part, host point) cells. entries[part][point]
/// holds the granularity multiplier t; the realized member count of that cell
/// is floor(t * granularity), so sum_p entries[U][p] * granularity <= |U|.
struct CountTable {
  double granularity = 1.0;
  std::vector<std::vector<long long>> entries;
};

struct FiniteEmbedOptions {
  double partition_delta = 0.25;      // failure prob. for the defect estimates
  std::uint64_t partition_seed = 0x706172ull;  // defect estimator stream
  PseudoregularOptions partition;     // caps for the two partitions
};

struct FiniteEmbedResult {
  std::vector<int> point_of;          // local object index -> host point index
  double accuracy = 1.0;              // scored at c = 1 + eps_prime
  bool budget_exhausted = false;      // enumeration stopped at the budget
  std::uint64_t candidates = 0;       // count tables realized and scored
  CountTable table;                   // table realizing the returned assignment
  double c1 = 0.0;                    // pseudoregularity target used
  double c2 = 0.0;                    // granularity formula value
  std::size_t refinement_parts = 0;   // |V|, common refinement size
};

/// Embeds the objects of `sub` into the points of `host`, maximizing the
/// fraction of satisfied pairs at distortion c = 1 + eps_prime. Builds
/// c1-pseudoregular partitions of the similarity and dissimilarity graphs
/// (c1 = epsilon / (8 |N|^2)), takes their common refinement, and enumerates
/// count tables on the c2 grid (c2 = epsilon |C| / (8 |N|^2 k^4)) in
/// lexicographic cell order with branch-and-bound pruning. Each table is
/// realized by filling host points with part members in sorted order;
/// leftovers are placed greedily. A greedy assignment seeds the incumbent so
/// the result is never worse than one straight construction pass. Stops after
/// `enum_budget` scored tables, or after a fixed multiple of the budget in
/// interior search steps (pruned branches score nothing, so steps are what
/// actually bound the runtime), and flags the result budget_exhausted; the
/// incumbent is monotone in the budget.
FiniteEmbedResult embed_into_finite_metric(const PairSystem& sub,
                                           const FiniteMetric& host, double epsilon,
                                           double eps_prime,
                                           std::uint64_t enum_budget = 1u << 20,
                                           const FiniteEmbedOptions& opt = {});

}  // namespace cml
