#pragma once

#include <cstdint>
#include <vector>

#include "cml/graph.hpp"

namespace cml {

/// Equitable vertex partition with pairwise edge densities. Densities use the
/// ordered-pair convention on the diagonal (d_ii = 2 * e(V_i) / |V_i|^2), so
/// d_ij is always the empirical edge probability between the two blocks.
struct PseudoregularPartition {
  std::vector<std::vector<int>> parts;  // sorted members; sizes differ by <= 1
  std::vector<std::vector<double>> density;
  double epsilon = 0.0;          // defect target the construction aimed for
  double defect_estimate = 0.0;  // estimated normalized defect of the result
};

struct PseudoregularOptions {
  int part_cap = 1024;         // refinement stops here -> PartBudgetExceeded
  int exact_defect_limit = 12; // exhaustive witness search up to this n
  int sample_cap = 4000;       // random cut samples per defect estimate
  int improve_passes = 3;      // greedy single-vertex polish of the witness
};

/// A cut witness for the partition defect: vertices labeled 0 (outside),
/// 1 (in S) or 2 (in T), and the normalized discrepancy
/// |e(S,T) - sum_ij d_ij |S cap V_i| |T cap V_j|| / n^2 it achieves.
struct DefectWitness {
  double defect = 0.0;
  std::vector<int> side_of;
};

/// Exhaustive defect over all disjoint S, T (3^n assignments); intended for
/// small n in tests and for the construction below when n is small.
DefectWitness exact_defect(const SimpleGraph& g,
                           const std::vector<std::vector<int>>& parts);

/// Randomized defect estimate: samples disjoint (S, T) pairs, keeps the worst
/// discrepancy, and polishes it with single-vertex moves. Certifies
/// "defect <= epsilon" only in the Monte Carlo sense controlled by the sample
/// count; delta steers how many samples are drawn.
DefectWitness estimate_defect(const SimpleGraph& g,
                              const std::vector<std::vector<int>>& parts,
                              double epsilon, double delta, std::uint64_t seed,
                              const PseudoregularOptions& opt = {});

/// Builds an equitable partition whose estimated defect is at most epsilon:
/// starting from one block, repeatedly find a witness cut, refine the vertex
/// order by it, and double the block count until the estimate passes or the
/// part cap is hit (PartBudgetExceeded). With the cap at n the construction
/// always terminates, because singleton blocks have defect exactly zero.
PseudoregularPartition pseudoregular_partition(const SimpleGraph& g, double epsilon,
                                               double delta, std::uint64_t seed,
                                               PseudoregularOptions opt = {});

/// Common refinement: all nonempty pairwise intersections, ordered by (index
/// in a, index in b). Throws GroundSetMismatch unless both partition exactly
/// the same ground set.
std::vector<std::vector<int>> refine_partitions(const std::vector<std::vector<int>>& a,
                                                const std::vector<std::vector<int>>& b);

}  // namespace cml
