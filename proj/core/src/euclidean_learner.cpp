#include "cml/euclidean_learner.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "cml/errors.hpp"
#include "cml/finite_embed.hpp"
#include "cml/graph.hpp"
#include "cml/graph_partition.hpp"
#include "cml/grid_host.hpp"
#include "cml/lipschitz.hpp"
#include "cml/rng.hpp"

namespace cml {
namespace {

struct ClusterEmbedding {
  Embedding embedding{Embedding::line()};
  ClusterStat stat;
};

// Net the cluster ball at the given image diameter (shrinking it until the
// point budget fits) and pick the assignment by bounded search.
ClusterEmbedding embed_cluster(const Instance& inst, const std::vector<std::string>& ids,
                               int dim, double embed_epsilon, double eps_prime,
                               double delta_image, const EuclideanOptions& opt,
                               std::uint64_t partition_seed) {
  PairSystem sub = restrict_to(inst, ids);
  ClusterEmbedding out;
  out.stat.size = ids.size();

  double delta_try = std::max(delta_image, 0.0);
  GridHost grid;
  while (true) {
    try {
      grid = discretize_ball(delta_try, dim, eps_prime, inst.u, inst.l, opt.grid_budget);
      break;
    } catch (const PointBudgetExceeded&) {
      delta_try /= 2.0;
      if (delta_try < 1e-12 * std::max(1.0, delta_image)) delta_try = 0.0;
    }
  }
  out.stat.delta_used = delta_try;
  out.stat.grid_points = grid.metric.size();

  FiniteEmbedOptions feo;
  feo.partition_seed = partition_seed;
  FiniteEmbedResult fe = embed_into_finite_metric(sub, grid.metric, embed_epsilon,
                                                  eps_prime, opt.enum_budget, feo);
  out.stat.accuracy = fe.accuracy;
  out.stat.budget_exhausted = fe.budget_exhausted;

  out.embedding = Embedding::euclidean(dim);
  for (std::size_t i = 0; i < sub.ids.size(); ++i)
    out.embedding.coords[sub.ids[i]] = grid.coords[static_cast<std::size_t>(fe.point_of[i])];
  return out;
}

struct RestartCandidate {
  Embedding embedding{Embedding::line()};
  AccuracyReport report;
  std::vector<ClusterStat> stats;
  bool budget_exhausted = false;
};

RestartCandidate assemble(const Instance& inst, int dim, double eps_prime,
                          double separation, std::vector<ClusterEmbedding> parts) {
  RestartCandidate cand;
  std::vector<Embedding> embeddings;
  embeddings.reserve(parts.size());
  for (auto& p : parts) {
    embeddings.push_back(std::move(p.embedding));
    cand.stats.push_back(p.stat);
    cand.budget_exhausted = cand.budget_exhausted || p.stat.budget_exhausted;
  }
  cand.embedding = combine_cluster_embeddings(embeddings, dim, separation);
  cand.report = accuracy(inst, cand.embedding, 1.0 + eps_prime);
  return cand;
}

EuclideanResult pick_best(const Instance& inst, std::vector<RestartCandidate> cands) {
  EuclideanResult res;
  res.restarts = static_cast<int>(cands.size());
  int best = 0;
  for (int r = 1; r < static_cast<int>(cands.size()); ++r)
    if (cands[static_cast<std::size_t>(r)].report.accuracy >
        cands[static_cast<std::size_t>(best)].report.accuracy)
      best = r;
  auto& win = cands[static_cast<std::size_t>(best)];
  res.embedding = std::move(win.embedding);
  res.report = std::move(win.report);
  res.cluster_stats = std::move(win.stats);
  res.budget_exhausted = win.budget_exhausted;
  res.best_restart = best;
  (void)inst;
  return res;
}

int auto_restarts(std::size_t n, int requested) {
  if (requested > 0) return requested;
  double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  return static_cast<int>(std::ceil(lg)) + 1;
}

// Deterministic sub-seed per (stage tag, restart, cluster).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t a,
                       std::uint64_t b = 0) {
  return Rng(seed).split(tag).split(a).split(b).next();
}

template <typename MakeCandidate>
std::vector<RestartCandidate> run_restarts(int restarts, int jobs, MakeCandidate make) {
  std::vector<RestartCandidate> cands;
  cands.reserve(static_cast<std::size_t>(restarts));
  if (jobs <= 1) {
    for (int r = 0; r < restarts; ++r) cands.push_back(make(r));
    return cands;
  }
  std::vector<std::future<RestartCandidate>> futs;
  futs.reserve(static_cast<std::size_t>(restarts));
  for (int r = 0; r < restarts; ++r)
    futs.push_back(std::async(std::launch::async, make, r));
  for (auto& f : futs) cands.push_back(f.get());
  return cands;
}

}  // namespace

Embedding combine_cluster_embeddings(const std::vector<Embedding>& parts, int dim,
                                     double separation) {
  if (dim < 1) throw InvalidParameter("combine needs dimension >= 1");
  if (!(separation >= 0.0) || !std::isfinite(separation))
    throw InvalidParameter("combine needs finite separation >= 0");
  Embedding out = Embedding::euclidean(dim);
  double offset = 0.0;
  bool first = true;
  for (const auto& part : parts) {
    if (part.coords.empty()) continue;
    std::vector<double> lo(static_cast<std::size_t>(dim),
                           std::numeric_limits<double>::infinity());
    double hi_x = -std::numeric_limits<double>::infinity();
    for (const auto& [id, x] : part.coords) {
      if (static_cast<int>(x.size()) != dim)
        throw DimensionMismatch("combine: coordinate arity mismatch for '" + id + "'");
      for (int a = 0; a < dim; ++a)
        lo[static_cast<std::size_t>(a)] = std::min(lo[static_cast<std::size_t>(a)],
                                                   x[static_cast<std::size_t>(a)]);
      hi_x = std::max(hi_x, x[0]);
    }
    double shift_x = (first ? 0.0 : offset + separation) - lo[0];
    for (const auto& [id, x] : part.coords) {
      if (out.coords.count(id))
        throw InvalidParameter("combine: object '" + id + "' appears in two clusters");
      std::vector<double> y(static_cast<std::size_t>(dim));
      y[0] = x[0] + shift_x;
      for (int a = 1; a < dim; ++a)
        y[static_cast<std::size_t>(a)] =
            x[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)];
      out.coords[id] = std::move(y);
    }
    offset = hi_x + shift_x;
    first = false;
  }
  return out;
}

EuclideanResult learn_euclidean_perfect(const Instance& inst, int dim, double epsilon,
                                        double eps_prime, std::uint64_t seed,
                                        const EuclideanOptions& opt) {
  validate_instance(inst);
  if (!inst.complete_information())
    throw IncompleteInformation("euclidean learner needs every pair labelled");
  if (dim < 1) throw InvalidParameter("dimension must be >= 1");
  if (!(epsilon > 0.0) || !(eps_prime > 0.0))
    throw InvalidParameter("epsilon and eps_prime must be > 0");

  EuclideanResult res;
  if (inst.n() == 0) {
    res.embedding = Embedding::euclidean(dim);
    res.report = accuracy(inst, res.embedding, 1.0 + eps_prime);
    res.restarts = 0;
    return res;
  }
  (void)inst.sorted_ids();  // warm the lazy index before parallel restarts
  ConstraintGraphS g = ConstraintGraphS::build(inst);
  const auto& ids = inst.sorted_ids();

  const double rd = static_cast<double>(dim);
  const double delta_scale = opt.constant_c * std::sqrt(rd) * inst.u / epsilon;
  double carve = 0.0;
  if (inst.u > 0.0) {
    carve = inst.u * std::pow(1.0 + 4.0 * delta_scale / inst.u, rd);
    carve = std::min(carve, opt.carve_cap_multiplier * inst.u *
                                static_cast<double>(inst.n()));
  }
  if (!(carve > 0.0)) carve = 1e-9;  // u = 0: components collapse to points
  const double separation = opt.separation < 0.0 ? inst.l : opt.separation;

  const int restarts = auto_restarts(inst.n(), opt.restarts);
  auto make = [&](int r) {
    LipschitzPartitionSample sample = sample_lipschitz_partition(
        g, carve, sub_seed(seed, 0xca57e11, static_cast<std::uint64_t>(r)));
    std::vector<ClusterEmbedding> parts;
    for (std::size_t ci = 0; ci < sample.clusters.size(); ++ci) {
      std::vector<std::string> cluster_ids;
      for (int v : sample.clusters[ci]) cluster_ids.push_back(ids[static_cast<std::size_t>(v)]);
      double diam = g.rho_diameter(sample.clusters[ci]);
      double delta_image = std::min(carve, diam);
      parts.push_back(embed_cluster(inst, cluster_ids, dim, epsilon / 2.0, eps_prime,
                                    delta_image, opt,
                                    sub_seed(seed, 0x9a2d17, static_cast<std::uint64_t>(r), ci)));
    }
    return assemble(inst, dim, eps_prime, separation, std::move(parts));
  };
  res = pick_best(inst, run_restarts(restarts, opt.jobs, make));
  return res;
}

EuclideanResult learn_euclidean_imperfect(const Instance& inst, int dim, double epsilon,
                                          double eps_prime, double zeta,
                                          std::uint64_t seed,
                                          const EuclideanOptions& opt) {
  validate_instance(inst);
  if (!inst.complete_information())
    throw IncompleteInformation("euclidean learner needs every pair labelled");
  if (dim < 1) throw InvalidParameter("dimension must be >= 1");
  if (!(epsilon > 0.0) || !(eps_prime > 0.0))
    throw InvalidParameter("epsilon and eps_prime must be > 0");
  if (!(zeta >= 0.0)) throw InvalidParameter("zeta must be >= 0");

  EuclideanResult res;
  if (inst.n() == 0) {
    res.embedding = Embedding::euclidean(dim);
    res.report = accuracy(inst, res.embedding, 1.0 + eps_prime);
    res.restarts = 0;
    return res;
  }
  (void)inst.sorted_ids();
  ConstraintGraphS g = ConstraintGraphS::build(inst);

  const double alpha = noise_alpha(zeta, inst.n());
  WellLinkedOptions wlo;
  wlo.constant_c = opt.wl_constant_c;
  wlo.slack = opt.wl_slack;
  WellLinkedDecomposition wld = well_linked_decomposition(inst, alpha, wlo);

  const double lg = std::max(std::log(static_cast<double>(inst.n())), 1.0);
  const double alpha_prime = opt.isoperimetry_c * wld.chi;
  const double separation = opt.separation < 0.0 ? inst.l : opt.separation;

  // Component image diameters, independent of the restart index.
  std::vector<double> deltas;
  deltas.reserve(wld.components.size());
  for (const auto& comp : wld.components) {
    std::vector<int> local;
    local.reserve(comp.size());
    for (const auto& id : comp) local.push_back(static_cast<int>(inst.index_of_checked(id)));
    double diam = g.rho_diameter(local);
    double want = alpha_prime > 0.0
                      ? opt.diam_constant * inst.u * lg / alpha_prime
                      : std::numeric_limits<double>::infinity();
    deltas.push_back(std::min(want, diam));
  }

  const int restarts = auto_restarts(inst.n(), opt.restarts);
  auto make = [&](int r) {
    std::vector<ClusterEmbedding> parts;
    for (std::size_t ci = 0; ci < wld.components.size(); ++ci)
      parts.push_back(embed_cluster(inst, wld.components[ci], dim, epsilon / 2.0,
                                    eps_prime, deltas[ci], opt,
                                    sub_seed(seed, 0x11f3c7, static_cast<std::uint64_t>(r), ci)));
    return assemble(inst, dim, eps_prime, separation, std::move(parts));
  };
  res = pick_best(inst, run_restarts(restarts, opt.jobs, make));
  res.alpha = alpha;
  res.removed_edges = wld.removed_edges.size();
  return res;
}

}  // namespace cml
