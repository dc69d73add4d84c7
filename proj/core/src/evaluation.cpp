#include "cml/evaluation.hpp"

#include <algorithm>
#include <limits>

#include "cml/errors.hpp"

namespace cml {

bool satisfies(PairKind kind, double distance, double u, double l, double c,
               double tolerance) {
  if (!(c >= 1.0)) throw InvalidParameter("distortion c must be >= 1");
  if (kind == PairKind::Similar) return distance <= u * c + tolerance;
  return distance >= l / c - tolerance;
}

AccuracyReport accuracy(const Instance& inst, const Embedding& emb, double c,
                        double tolerance) {
  if (!(c >= 1.0)) throw InvalidParameter("distortion c must be >= 1");
  emb.check_against(inst);
  HostDistance dist(emb);

  AccuracyReport rep;
  rep.c = c;
  std::size_t total = inst.similar.size() + inst.dissimilar.size();
  for (const auto& pr : inst.similar) {
    double d = dist(pr.first, pr.second);
    if (satisfies(PairKind::Similar, d, inst.u, inst.l, c, tolerance))
      ++rep.satisfied_similar;
    else
      rep.violated.push_back({pr, PairKind::Similar, d});
  }
  for (const auto& pr : inst.dissimilar) {
    double d = dist(pr.first, pr.second);
    if (satisfies(PairKind::Dissimilar, d, inst.u, inst.l, c, tolerance))
      ++rep.satisfied_dissimilar;
    else
      rep.violated.push_back({pr, PairKind::Dissimilar, d});
  }
  rep.accuracy =
      total == 0
          ? 1.0
          : static_cast<double>(rep.satisfied_similar + rep.satisfied_dissimilar) /
                static_cast<double>(total);
  return rep;
}

double min_distortion(const Instance& inst, const Embedding& emb) {
  emb.check_against(inst);
  HostDistance dist(emb);
  double c = 1.0;
  for (const auto& pr : inst.similar) {
    double d = dist(pr.first, pr.second);
    if (inst.u == 0.0) {
      if (d > kEvalTolerance) return std::numeric_limits<double>::infinity();
      continue;
    }
    c = std::max(c, d / inst.u);
  }
  for (const auto& pr : inst.dissimilar) {
    double d = dist(pr.first, pr.second);
    if (inst.l == 0.0) continue;  // always satisfied
    if (d <= 0.0) return std::numeric_limits<double>::infinity();
    c = std::max(c, inst.l / d);
  }
  return c;
}

}  // namespace cml
