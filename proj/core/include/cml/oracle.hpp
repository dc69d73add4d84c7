#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cml/finite_metric.hpp"
#include "cml/instance.hpp"

namespace cml {

// Reference implementations used to check the learners. They re-derive
// satisfaction from scratch on purpose; keep them free of the production
// search and evaluation code paths.

struct FiniteOracleResult {
  double accuracy = 0.0;
  std::vector<int> point_of;    // lexicographically first optimum
  std::uint64_t evaluated = 0;  // assignments scored
};

/// Exhaustive optimum of assignments into a finite host at distortion c.
/// Throws OracleBudgetExceeded if |host|^n would exceed `cap` assignments.
FiniteOracleResult brute_force_finite(const PairSystem& sub, const FiniteMetric& host,
                                      double c, std::uint64_t cap = 10'000'000);

struct LineOracleResult {
  bool feasible = false;
  std::map<std::string, double> witness;  // empty when infeasible
  std::uint64_t nodes = 0;                // search tree nodes visited
};

/// Exact line feasibility (distortion 1) by searching all object orderings
/// with exact-arithmetic cycle checks; meant for small n. Throws
/// OracleBudgetExceeded past `cap` search nodes.
LineOracleResult brute_force_line_feasible(const Instance& inst,
                                           std::uint64_t cap = 5'000'000);

/// Exhaustive optimum over a canonical tree host with the given shape.
FiniteOracleResult brute_force_tree_small(const PairSystem& sub, double alpha, int depth,
                                          int arity, double c,
                                          std::uint64_t cap = 10'000'000,
                                          std::size_t tree_budget = 4096);

}  // namespace cml
