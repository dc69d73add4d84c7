#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cml/embedding.hpp"
#include "cml/instance.hpp"

namespace cml {

struct PlantedOptions {
  int dim = 1;        // euclidean hosts
  double box = 0.0;   // side length of the sampling box; 0 = auto (l * n^(1/d))
  int point_retries = 200;  // redraws of a single point before restarting
  int restarts = 50;        // full redraws before GenerationBudgetExceeded
};

/// What the generator planted: the ground embedding that realizes the labels
/// before noise, and the pairs whose labels were flipped afterwards.
struct PlantedTruth {
  Embedding ground;
  double noise_rate = 0.0;
  std::vector<IdPair> flipped;
};

/// Samples a complete-information instance that a ground embedding satisfies
/// exactly, then flips each pair label independently with probability
/// noise_rate. Pairs whose ground distance falls in the open interval (u, l)
/// are avoided by redrawing points; when the redraw caps are exhausted the
/// generator raises GenerationBudgetExceeded (the gap is too wide for the
/// sampling box). Tree hosts use a random attachment tree with edges of
/// length u, so they require l <= 2u.
std::pair<Instance, PlantedTruth> generate_planted(HostKind host, int n, double u,
                                                   double l, double noise_rate,
                                                   std::uint64_t seed,
                                                   PlantedOptions opt = {});

}  // namespace cml
