#include "cml/tree_learner.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <memory>

#include "cml/errors.hpp"
#include "cml/finite_embed.hpp"
#include "cml/graph.hpp"
#include "cml/graph_partition.hpp"
#include "cml/line_learner.hpp"
#include "cml/rng.hpp"

namespace cml {
namespace {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t a,
                       std::uint64_t b = 0) {
  return Rng(seed).split(tag).split(a).split(b).next();
}

int auto_restarts(std::size_t n, int requested) {
  if (requested > 0) return requested;
  double lg = std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  return static_cast<int>(std::ceil(lg)) + 1;
}

struct RestartCandidate {
  TreeEmbedding merged;
  Embedding embedding{Embedding::line()};
  AccuracyReport report;
  std::vector<TreeHostStat> stats;
  bool budget_exhausted = false;
};

RestartCandidate assemble(const Instance& inst, double eps_prime, double separation,
                          std::vector<TreeEmbedding> parts,
                          std::vector<TreeHostStat> stats) {
  RestartCandidate cand;
  cand.merged = merge_trees(parts, separation);
  auto tree = std::make_shared<TreeMetric>(cand.merged.tree);
  cand.embedding = Embedding::on_tree(tree);
  cand.embedding.vertex_of = cand.merged.assignment;
  cand.report = accuracy(inst, cand.embedding, 1.0 + eps_prime);
  cand.stats = std::move(stats);
  for (const auto& s : cand.stats)
    cand.budget_exhausted = cand.budget_exhausted || s.budget_exhausted;
  return cand;
}

TreeResult pick_best(std::vector<RestartCandidate> cands) {
  TreeResult res;
  res.restarts = static_cast<int>(cands.size());
  int best = 0;
  for (int r = 1; r < static_cast<int>(cands.size()); ++r)
    if (cands[static_cast<std::size_t>(r)].report.accuracy >
        cands[static_cast<std::size_t>(best)].report.accuracy)
      best = r;
  auto& win = cands[static_cast<std::size_t>(best)];
  res.merged = std::move(win.merged);
  res.embedding = std::move(win.embedding);
  res.report = std::move(win.report);
  res.cluster_stats = std::move(win.stats);
  res.budget_exhausted = win.budget_exhausted;
  res.best_restart = best;
  return res;
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

double fallback_separation(double l, double eps_prime) {
  if (l > 0.0) return l;
  return std::max(eps_prime / 2.0, 1e-9);
}

}  // namespace

AnnuliPartition annuli_partition(const Instance& inst, double delta, std::uint64_t seed) {
  validate_instance(inst);
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw InvalidParameter("annuli partition needs finite delta > 0");
  if (inst.n() == 0) throw EmptyGraph("annuli partition needs at least one object");
  ConstraintGraphS g = ConstraintGraphS::build(inst);
  if (g.graph.components().size() != 1)
    throw NotConnected("annuli partition needs a connected similarity graph");
  const auto& ids = inst.sorted_ids();

  AnnuliPartition out;
  out.center = ids.front();
  out.delta = delta;
  out.shift = Rng(seed).uniform();

  std::vector<double> rho = g.rho_from(0);
  const int n = g.graph.n;
  std::vector<int> ring(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    ring[static_cast<std::size_t>(v)] = static_cast<int>(
        std::floor(2.0 * rho[static_cast<std::size_t>(v)] / delta - out.shift));
    out.ring_index[ids[static_cast<std::size_t>(v)]] = ring[static_cast<std::size_t>(v)];
  }

  // Clusters: connected similarity pieces inside each ring, listed ring by
  // ring. An S-edge is cut exactly when its endpoints land in distinct rings.
  std::vector<int> by_ring(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_ring[static_cast<std::size_t>(v)] = v;
  std::sort(by_ring.begin(), by_ring.end(), [&](int a, int b) {
    if (ring[static_cast<std::size_t>(a)] != ring[static_cast<std::size_t>(b)])
      return ring[static_cast<std::size_t>(a)] < ring[static_cast<std::size_t>(b)];
    return a < b;
  });
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int s : by_ring) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.graph.adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)] &&
            ring[static_cast<std::size_t>(w)] == ring[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<std::string> names;
    names.reserve(comp.size());
    for (int v : comp) names.push_back(ids[static_cast<std::size_t>(v)]);
    out.clusters.push_back(std::move(names));
  }
  for (const auto& e : g.graph.edges) {
    if (ring[static_cast<std::size_t>(e.first)] != ring[static_cast<std::size_t>(e.second)])
      out.cut_similar_pairs.push_back(
          make_pair_sorted(ids[static_cast<std::size_t>(e.first)],
                           ids[static_cast<std::size_t>(e.second)]));
  }
  std::sort(out.cut_similar_pairs.begin(), out.cut_similar_pairs.end());
  return out;
}

TreeEmbedding embed_into_canonical_tree(const PairSystem& sub, double delta,
                                        double epsilon, double eps_prime,
                                        const TreeOptions& opt, std::uint64_t seed,
                                        TreeHostStat* stat) {
  if (!(epsilon > 0.0) || !(eps_prime > 0.0))
    throw InvalidParameter("canonical tree embedding needs epsilon, eps_prime > 0");
  const double alpha = eps_prime / 2.0;
  const std::size_t budget = std::max<std::size_t>(opt.tree_budget, 1);
  int depth = delta > 0.0 ? static_cast<int>(std::ceil(delta / eps_prime)) : 0;
  int arity = static_cast<int>(std::ceil(8.0 / epsilon));
  arity = std::max(arity, 1);

  // Budget clamp: keep the formula depth as long as some arity >= 2 fits,
  // otherwise trade depth away last.
  if (canonical_tree_size(depth, arity, budget) > budget) {
    int fit_arity = 0;
    for (int a = std::min(arity - 1, static_cast<int>(budget)); a >= 2; --a) {
      if (canonical_tree_size(depth, a, budget) <= budget) { fit_arity = a; break; }
    }
    if (fit_arity >= 2) {
      arity = fit_arity;
    } else {
      arity = 2;
      while (depth > 0 && canonical_tree_size(depth, 2, budget) > budget) --depth;
    }
  }

  TreeEmbedding out;
  out.tree = canonical_tree(alpha, depth, arity, budget);

  FiniteMetric host;
  host.points = out.tree.vertices;
  host.dist = out.tree.all_pairs();

  FiniteEmbedOptions feo;
  feo.partition_seed = seed;
  FiniteEmbedResult fe =
      embed_into_finite_metric(sub, host, epsilon / 2.0, eps_prime, opt.enum_budget, feo);
  for (std::size_t i = 0; i < sub.ids.size(); ++i)
    out.assignment[sub.ids[i]] = host.points[static_cast<std::size_t>(fe.point_of[i])];

  if (stat) {
    stat->size = sub.ids.size();
    stat->delta_used = delta;
    stat->depth = depth;
    stat->arity = arity;
    stat->host_vertices = host.size();
    stat->accuracy = fe.accuracy;
    stat->budget_exhausted = fe.budget_exhausted;
  }
  return out;
}

TreeEmbedding merge_trees(const std::vector<TreeEmbedding>& parts, double separation) {
  if (!(separation > 0.0) || !std::isfinite(separation))
    throw InvalidParameter("merge_trees needs finite separation > 0");
  TreeEmbedding out;
  out.tree.root = "merged_root";
  out.tree.vertices.push_back("merged_root");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const TreeMetric& t = parts[i].tree;
    if (t.vertices.empty()) continue;
    std::string prefix = "t" + std::to_string(i) + ".";
    for (const auto& v : t.vertices) out.tree.vertices.push_back(prefix + v);
    for (const auto& [v, w, len] : t.edges)
      out.tree.edges.emplace_back(prefix + v, prefix + w, len);
    // Hang the part from the shared root at its smallest vertex; the two
    // root edges alone put distinct parts >= 4 * separation apart.
    std::string attach = *std::min_element(t.vertices.begin(), t.vertices.end());
    out.tree.edges.emplace_back("merged_root", prefix + attach, 2.0 * separation);
    for (const auto& [obj, vertex] : parts[i].assignment) {
      if (out.assignment.count(obj))
        throw InvalidParameter("merge_trees: object '" + obj + "' in two parts");
      out.assignment[obj] = prefix + vertex;
    }
  }
  out.tree.validate();
  return out;
}

TreeResult learn_tree_perfect(const Instance& inst, double epsilon, double eps_prime,
                              std::uint64_t seed, const TreeOptions& opt) {
  validate_instance(inst);
  if (!inst.complete_information())
    throw IncompleteInformation("tree learner needs every pair labelled");
  if (!(epsilon > 0.0) || !(eps_prime > 0.0))
    throw InvalidParameter("epsilon and eps_prime must be > 0");

  if (inst.n() == 0) {
    TreeResult res;
    res.merged = merge_trees({}, fallback_separation(inst.l, eps_prime));
    auto tree = std::make_shared<TreeMetric>(res.merged.tree);
    res.embedding = Embedding::on_tree(tree);
    res.report = accuracy(inst, res.embedding, 1.0 + eps_prime);
    return res;
  }
  (void)inst.sorted_ids();
  ConstraintGraphS g = ConstraintGraphS::build(inst);
  const auto& ids = inst.sorted_ids();

  double delta = opt.constant_delta * inst.u / epsilon;
  if (!(delta > 0.0)) delta = 1e-9;
  const double separation = fallback_separation(inst.l, eps_prime);

  std::vector<std::vector<std::string>> comps;
  for (const auto& comp : g.graph.components()) {
    std::vector<std::string> names;
    names.reserve(comp.size());
    for (int v : comp) names.push_back(ids[static_cast<std::size_t>(v)]);
    comps.push_back(std::move(names));
  }

  const int restarts = auto_restarts(inst.n(), opt.restarts);
  auto make = [&](int r) {
    std::vector<TreeEmbedding> parts;
    std::vector<TreeHostStat> stats;
    std::size_t cluster_counter = 0;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      Instance comp_inst = subinstance(inst, comps[ci]);
      AnnuliPartition ann = annuli_partition(
          comp_inst, delta, sub_seed(seed, 0xa22011, static_cast<std::uint64_t>(r), ci));
      for (const auto& cluster : ann.clusters) {
        PairSystem sub = restrict_to(inst, cluster);
        std::vector<int> local;
        local.reserve(cluster.size());
        for (const auto& id : cluster) local.push_back(static_cast<int>(inst.index_of_checked(id)));
        double diam = g.rho_diameter(local);
        double delta_image = std::min(delta + 2.0 * inst.u, diam);
        TreeHostStat stat;
        parts.push_back(embed_into_canonical_tree(
            sub, delta_image, epsilon, eps_prime, opt,
            sub_seed(seed, 0x7c3e11, static_cast<std::uint64_t>(r), cluster_counter),
            &stat));
        stats.push_back(stat);
        ++cluster_counter;
      }
    }
    return assemble(inst, eps_prime, separation, std::move(parts), std::move(stats));
  };
  return pick_best(run_restarts(restarts, opt.jobs, make));
}

TreeResult learn_tree_imperfect(const Instance& inst, double epsilon, double eps_prime,
                                double zeta, std::uint64_t seed, const TreeOptions& opt) {
  validate_instance(inst);
  if (!inst.complete_information())
    throw IncompleteInformation("tree learner needs every pair labelled");
  if (!(epsilon > 0.0) || !(eps_prime > 0.0))
    throw InvalidParameter("epsilon and eps_prime must be > 0");
  if (!(zeta >= 0.0)) throw InvalidParameter("zeta must be >= 0");

  if (inst.n() == 0) {
    TreeResult res;
    res.merged = merge_trees({}, fallback_separation(inst.l, eps_prime));
    auto tree = std::make_shared<TreeMetric>(res.merged.tree);
    res.embedding = Embedding::on_tree(tree);
    res.report = accuracy(inst, res.embedding, 1.0 + eps_prime);
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
  const double separation = fallback_separation(inst.l, eps_prime);

  std::vector<double> deltas;
  std::vector<PairSystem> subs;
  deltas.reserve(wld.components.size());
  subs.reserve(wld.components.size());
  for (const auto& comp : wld.components) {
    std::vector<int> local;
    local.reserve(comp.size());
    for (const auto& id : comp) local.push_back(static_cast<int>(inst.index_of_checked(id)));
    double diam = g.rho_diameter(local);
    double want = alpha_prime > 0.0
                      ? opt.diam_constant * inst.u * lg / alpha_prime
                      : std::numeric_limits<double>::infinity();
    deltas.push_back(std::min(want, diam));
    subs.push_back(restrict_to(inst, comp));
  }

  const int restarts = auto_restarts(inst.n(), opt.restarts);
  auto make = [&](int r) {
    std::vector<TreeEmbedding> parts;
    std::vector<TreeHostStat> stats;
    for (std::size_t ci = 0; ci < subs.size(); ++ci) {
      TreeHostStat stat;
      parts.push_back(embed_into_canonical_tree(
          subs[ci], deltas[ci], epsilon, eps_prime, opt,
          sub_seed(seed, 0x33a9d1, static_cast<std::uint64_t>(r), ci), &stat));
      stats.push_back(stat);
    }
    return assemble(inst, eps_prime, separation, std::move(parts), std::move(stats));
  };
  TreeResult res = pick_best(run_restarts(restarts, opt.jobs, make));
  res.alpha = alpha;
  res.removed_edges = wld.removed_edges.size();
  return res;
}

}  // namespace cml
