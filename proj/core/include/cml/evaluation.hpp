#pragma once

#include <string>
#include <vector>

#include "cml/embedding.hpp"
#include "cml/instance.hpp"

namespace cml {

enum class PairKind { Similar, Dissimilar };

/// Absolute comparison tolerance applied in favor of satisfaction, so that
/// boundary placements (distance exactly u or l) survive decimal rounding.
constexpr double kEvalTolerance = 1e-9;

/// Whether a pair of the given kind is satisfied at contrastive distortion c:
/// similar pairs need distance <= u * c, dissimilar pairs distance >= l / c.
/// c must be >= 1 (InvalidParameter otherwise).
bool satisfies(PairKind kind, double distance, double u, double l, double c,
               double tolerance = kEvalTolerance);

struct ViolatedPair {
  IdPair pair;
  PairKind kind;
  double distance;
};

struct AccuracyReport {
  double c = 1.0;
  std::size_t satisfied_similar = 0;
  std::size_t satisfied_dissimilar = 0;
  std::vector<ViolatedPair> violated;
  double accuracy = 1.0;  // satisfied / total labeled pairs (1 when no pairs)
};

/// Fraction of labeled pairs satisfied by `emb` at distortion c. The
/// embedding must cover every object of the instance.
AccuracyReport accuracy(const Instance& inst, const Embedding& emb, double c,
                        double tolerance = kEvalTolerance);

/// Same score over a restricted pair system; distances are supplied by the
/// callable `dist(i, j)` on local indices. Used by learners to grade cluster
/// assignments against finite hosts without materializing an Embedding.
template <typename DistFn>
double accuracy_on(const PairSystem& sys, DistFn&& dist, double c,
                   double tolerance = kEvalTolerance) {
  std::size_t total = sys.similar.size() + sys.dissimilar.size();
  if (total == 0) return 1.0;
  std::size_t good = 0;
  for (const auto& [i, j] : sys.similar)
    if (satisfies(PairKind::Similar, dist(i, j), sys.u, sys.l, c, tolerance)) ++good;
  for (const auto& [i, j] : sys.dissimilar)
    if (satisfies(PairKind::Dissimilar, dist(i, j), sys.u, sys.l, c, tolerance)) ++good;
  return static_cast<double>(good) / static_cast<double>(total);
}

/// Smallest distortion c at which `emb` satisfies every labeled pair, and at
/// least 1. Infinity when a dissimilar pair has distance 0 (and l > 0).
double min_distortion(const Instance& inst, const Embedding& emb);

}  // namespace cml
