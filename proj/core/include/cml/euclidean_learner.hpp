#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cml/embedding.hpp"
#include "cml/evaluation.hpp"
#include "cml/instance.hpp"

namespace cml {

struct ClusterStat {
  std::size_t size = 0;
  double delta_used = 0.0;      // image diameter the grid was built for
  std::size_t grid_points = 0;
  double accuracy = 0.0;        // within-cluster accuracy at c = 1 + eps_prime
  bool budget_exhausted = false;
};

struct EuclideanOptions {
  double constant_c = 1.0;        // scale parameter Delta = c * sqrt(d) * u / epsilon
  double carve_cap_multiplier = 2.0;  // cap the carving scale at this multiple of u * n
  double separation = -1.0;       // gap between placed clusters; < 0 means l
  std::size_t grid_budget = 512;  // max net points per cluster
  std::uint64_t enum_budget = 50000;   // assignment candidates per cluster
  int restarts = 0;               // <= 0 means ceil(log2 n) + 1
  int jobs = 1;                   // parallel restarts
  // imperfect pipeline only
  double diam_constant = 1.0;     // Delta = diam_constant * u * log n / alpha'
  double isoperimetry_c = 1.0;    // alpha' = isoperimetry_c * chi
  double wl_constant_c = 1.0;     // chi denominator scale
  double wl_slack = 1.0;
};

struct EuclideanResult {
  Embedding embedding{Embedding::line()};
  AccuracyReport report;          // against the full instance at c = 1 + eps_prime
  bool budget_exhausted = false;
  int best_restart = 0;
  int restarts = 0;
  double alpha = 0.0;             // imperfect pipeline: noise budget used
  std::size_t removed_edges = 0;  // imperfect pipeline: |E'|
  std::vector<ClusterStat> cluster_stats;  // winning restart, cluster order
};

/// Translate disjoint cluster embeddings into one map: each cluster keeps its
/// shape and is shifted along the first axis so consecutive bounding boxes
/// sit `separation` apart, which keeps every cross-cluster distance at least
/// `separation`.
Embedding combine_cluster_embeddings(const std::vector<Embedding>& parts, int dim,
                                     double separation);

/// Clean-label pipeline: carve the similarity metric at scale
/// u * (1 + 4 Delta / u)^d with Delta = c sqrt(d) u / epsilon, net each
/// cluster's ball, pick assignments by bounded search, place clusters far
/// apart, and keep the best of O(log n) random restarts.
EuclideanResult learn_euclidean_perfect(const Instance& inst, int dim, double epsilon,
                                        double eps_prime, std::uint64_t seed,
                                        const EuclideanOptions& opt = {});

/// Noisy-label pipeline: strip a sparse set of similarity edges until every
/// component is well-linked, then net and search each component at scale
/// u * log n / alpha'. With zeta = 0 nothing is removed and this degrades to
/// the clean pipeline with whole components as clusters.
EuclideanResult learn_euclidean_imperfect(const Instance& inst, int dim, double epsilon,
                                          double eps_prime, double zeta,
                                          std::uint64_t seed,
                                          const EuclideanOptions& opt = {});

}  // namespace cml
