#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cml/graph.hpp"
#include "cml/instance.hpp"

namespace cml {

struct Cut {
  std::vector<int> side;   // smaller side (ties: lexicographic), sorted
  double sparsity = 0.0;   // |E(U, V\U)| / (|U| |V\U|), uniform demands
  std::size_t crossing_edges = 0;
};

struct SparsestCutOptions {
  int exact_threshold = 16;  // enumerate all cuts up to this many vertices
};

/// Minimum-sparsity cut under uniform demands. Exact by enumeration for
/// small graphs; beyond the threshold a spectral sweep over the second
/// eigenvector of the normalized Laplacian stands in for the exact
/// optimum. Ties prefer the smaller side, then lexicographic members.
/// Throws EmptyGraph when the graph has fewer than two vertices.
Cut sparsest_cut(const SimpleGraph& g, const SparsestCutOptions& opt = {});

struct WellLinkedOptions {
  double constant_c = 1.0;  // scales the chi threshold denominator
  double slack = 1.0;       // accept components with sparsity > chi * slack
  SparsestCutOptions cut;
};

struct WellLinkedDecomposition {
  std::vector<std::vector<std::string>> components;  // sorted ids, by smallest id
  std::vector<IdPair> removed_edges;                 // E', canonical order
  double alpha = 0.0;
  double chi = 0.0;                      // target expansion threshold
  double edge_budget = 0.0;              // alpha * |S u D|
  std::vector<double> achieved_expansion;  // sparsest cut value found per component
  bool budget_hit = false;               // true if a split was refused for budget
};

/// Recursively split the similarity graph along cuts of sparsity <= chi
/// until every component is chi-well-linked or the removed-edge budget
/// alpha * |S u D| would be exceeded, whichever comes first.
WellLinkedDecomposition well_linked_decomposition(const Instance& inst, double alpha,
                                                  const WellLinkedOptions& opt = {});

/// Expansion threshold chi = alpha / (c * log^{3/2} n * loglog n), with the
/// logarithms clamped below at 1 so small n stays meaningful.
double well_linked_chi(double alpha, std::size_t n, double constant_c = 1.0);

/// Noise-budget alpha = zeta^{1/2} * log^{3/4} n * (loglog n)^{1/2}.
double noise_alpha(double zeta, std::size_t n);

struct CoreOptions {
  double constant_c = 1.0;  // scales the expansion requirement
  SparsestCutOptions cut;
};

/// Dense core of a component after deleting the suspect edges F: the largest
/// connected piece of G_S - F, trimmed of any vertex set U whose similarity
/// boundary is smaller than c * alpha_prime * |U| |rest|, and finally purged
/// of vertices that still touch an F edge inside the core. Returns sorted
/// ids; may be empty.
std::vector<std::string> extract_core(const Instance& inst,
                                      const std::vector<std::string>& component,
                                      const std::vector<IdPair>& suspect_edges,
                                      double alpha_prime, const CoreOptions& opt = {});

}  // namespace cml
