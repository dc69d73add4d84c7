#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cml/embedding.hpp"
#include "cml/evaluation.hpp"
#include "cml/instance.hpp"
#include "cml/tree_metric.hpp"

namespace cml {

struct AnnuliPartition {
  std::string center;               // lexicographically smallest id, v*
  double shift = 0.0;               // random ring offset in [0, 1)
  double delta = 0.0;
  std::map<std::string, int> ring_index;             // may be -1 next to the center
  std::vector<std::vector<std::string>> clusters;    // sorted ids, ring then id order
  std::vector<IdPair> cut_similar_pairs;             // S-edges across rings
};

/// Random annuli decomposition of a connected similarity component: rings of
/// width delta/2 around the smallest id, offset by a uniform shift, then
/// split into connected similarity pieces. Each similarity edge is cut with
/// probability at most u / (delta / 2) over the shift.
AnnuliPartition annuli_partition(const Instance& inst, double delta, std::uint64_t seed);

/// Complete rooted tree with uniform edge length alpha, depth `depth` and
/// branching `arity` (ids "r", "r.0", "r.0.1", ...). Declared in
/// tree_metric.hpp; used as the host family below.

struct TreeHostStat {
  std::size_t size = 0;            // cluster size
  double delta_used = 0.0;
  int depth = 0;                   // host parameters actually used
  int arity = 0;
  std::size_t host_vertices = 0;
  double accuracy = 0.0;
  bool budget_exhausted = false;
};

struct TreeEmbedding {
  TreeMetric tree;
  std::map<std::string, std::string> assignment;  // object id -> tree vertex
};

struct TreeOptions {
  double constant_delta = 8.0;     // Delta = constant_delta * u / epsilon
  std::size_t tree_budget = 160;   // max host vertices per cluster
  std::uint64_t enum_budget = 50000;
  int restarts = 0;                // <= 0 means ceil(log2 n) + 1
  int jobs = 1;
  // imperfect pipeline only
  double diam_constant = 1.0;
  double isoperimetry_c = 1.0;
  double wl_constant_c = 1.0;
  double wl_slack = 1.0;
};

/// Embed one cluster into a canonical tree with edge length eps_prime / 2,
/// depth ceil(delta / eps_prime) and arity ceil(8 / epsilon), shrinking
/// arity before depth when the vertex budget forces it.
TreeEmbedding embed_into_canonical_tree(const PairSystem& sub, double delta,
                                        double epsilon, double eps_prime,
                                        const TreeOptions& opt, std::uint64_t seed,
                                        TreeHostStat* stat = nullptr);

/// Join cluster trees under a fresh root: each part keeps its shape (vertex
/// ids get a "t<i>." prefix) and hangs from the root by an edge of length
/// 2 * separation, attached at its lexicographically smallest vertex.
/// Distances across parts are then at least 4 * separation.
TreeEmbedding merge_trees(const std::vector<TreeEmbedding>& parts, double separation);

struct TreeResult {
  TreeEmbedding merged;
  Embedding embedding{Embedding::line()};       // tree-host view of `merged`
  AccuracyReport report;                        // at c = 1 + eps_prime
  bool budget_exhausted = false;
  int best_restart = 0;
  int restarts = 0;
  double alpha = 0.0;                           // imperfect only
  std::size_t removed_edges = 0;                // imperfect only
  std::vector<TreeHostStat> cluster_stats;
};

/// Clean-label pipeline: annuli-partition each similarity component at
/// Delta = 8u / epsilon, embed every cluster into a canonical tree, and hang
/// all cluster trees from one root with separation l. Best of O(log n)
/// random restarts.
TreeResult learn_tree_perfect(const Instance& inst, double epsilon, double eps_prime,
                              std::uint64_t seed, const TreeOptions& opt = {});

/// Noisy-label pipeline: well-linked decomposition first, then one canonical
/// tree per component at scale u * log n / alpha'.
TreeResult learn_tree_imperfect(const Instance& inst, double epsilon, double eps_prime,
                                double zeta, std::uint64_t seed,
                                const TreeOptions& opt = {});

}  // namespace cml
