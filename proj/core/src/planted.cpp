#include "cml/planted.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "cml/errors.hpp"
#include "cml/rng.hpp"

namespace cml {

namespace {

std::string object_id(int i, int n) {
  int width = 1;
  for (int v = n; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(i + 1);
  return "o" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
}

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return s;
}

// Draws n points in [0, box]^d such that no pairwise distance falls in the
// open gap (u, l). Returns false when the retry caps ran out.
bool draw_points(Rng& rng, int n, int d, double box, double u, double l,
                 int point_retries, std::vector<std::vector<double>>& out) {
  out.clear();
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < point_retries && !placed; ++attempt) {
      std::vector<double> p(static_cast<std::size_t>(d));
      for (double& x : p) x = rng.uniform(0.0, box);
      placed = true;
      for (const auto& q : out) {
        double dist = std::sqrt(sq_dist(p, q));
        if (dist > u && dist < l) {
          placed = false;
          break;
        }
      }
      if (placed) out.push_back(std::move(p));
    }
    if (!placed) return false;
  }
  return true;
}

}  // namespace

std::pair<Instance, PlantedTruth> generate_planted(HostKind host, int n, double u,
                                                   double l, double noise_rate,
                                                   std::uint64_t seed,
                                                   PlantedOptions opt) {
  if (n < 1) throw InvalidParameter("planted instance needs n >= 1");
  if (!(u >= 0.0) || !std::isfinite(u)) throw InvalidParameter("u must be finite and >= 0");
  if (!(l >= 0.0) || !std::isfinite(l)) throw InvalidParameter("l must be finite and >= 0");
  if (noise_rate < 0.0 || noise_rate > 1.0)
    throw InvalidParameter("noise rate must lie in [0, 1]");
  if (host == HostKind::Euclidean && opt.dim < 1)
    throw InvalidParameter("euclidean host needs dim >= 1");

  int d = host == HostKind::Euclidean ? opt.dim : 1;
  double box = opt.box;
  if (box <= 0.0)
    box = std::max(2.0 * std::max(u, l),
                   l * std::pow(static_cast<double>(n), 1.0 / static_cast<double>(d)));

  Instance inst;
  inst.u = u;
  inst.l = l;
  for (int i = 0; i < n; ++i) inst.objects.push_back(object_id(i, n));

  PlantedTruth truth;
  truth.noise_rate = noise_rate;
  Rng rng(seed);

  std::vector<std::vector<double>> points;
  std::shared_ptr<TreeMetric> tree;

  if (host == HostKind::Line || host == HostKind::Euclidean) {
    bool ok = false;
    for (int r = 0; r < opt.restarts && !ok; ++r) {
      Rng draw = rng.split(static_cast<std::uint64_t>(r));
      ok = draw_points(draw, n, d, box, u, l, opt.point_retries, points);
    }
    if (!ok)
      throw GenerationBudgetExceeded(
          "could not place points outside the (u, l) gap; widen the box or narrow the gap");
    truth.ground = host == HostKind::Line ? Embedding::line() : Embedding::euclidean(d);
    for (int i = 0; i < n; ++i) truth.ground.coords[inst.objects[static_cast<std::size_t>(i)]] = points[static_cast<std::size_t>(i)];
  } else {
    // Random attachment tree with edges of length u. Distances are exact
    // multiples of u, so the open gap (u, l) is avoided structurally as long
    // as l <= 2u; otherwise distance 2u would land inside the gap for every
    // path of two edges, which no redraw can fix.
    if (n > 1) {
      if (u <= 0.0)
        throw InvalidParameter("tree host needs u > 0");
      if (l > 2.0 * u)
        throw GenerationBudgetExceeded(
            "tree host cannot avoid the gap (u, l) when l > 2u");
    }
    tree = std::make_shared<TreeMetric>();
    for (int i = 0; i < n; ++i) tree->vertices.push_back("t" + std::to_string(i));
    tree->root = tree->vertices.front();
    for (int i = 1; i < n; ++i) {
      int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
      tree->edges.emplace_back(tree->vertices[static_cast<std::size_t>(parent)],
                               tree->vertices[static_cast<std::size_t>(i)], u);
    }
    truth.ground = Embedding::on_tree(tree);
    for (int i = 0; i < n; ++i)
      truth.ground.vertex_of[inst.objects[static_cast<std::size_t>(i)]] =
          tree->vertices[static_cast<std::size_t>(i)];
  }

  HostDistance dist(truth.ground);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::string& a = inst.objects[static_cast<std::size_t>(i)];
      const std::string& b = inst.objects[static_cast<std::size_t>(j)];
      double dd = dist(a, b);
      if (dd <= u)
        inst.similar.push_back(make_pair_sorted(a, b));
      else
        inst.dissimilar.push_back(make_pair_sorted(a, b));
    }
  }
  std::sort(inst.similar.begin(), inst.similar.end());
  std::sort(inst.dissimilar.begin(), inst.dissimilar.end());

  if (noise_rate > 0.0) {
    Rng flips = rng.split(0x666c6970ull);  // independent stream for label noise
    std::vector<IdPair> sim, dis;
    for (const auto& pr : inst.similar) {
      if (flips.bernoulli(noise_rate)) {
        dis.push_back(pr);
        truth.flipped.push_back(pr);
      } else {
        sim.push_back(pr);
      }
    }
    for (const auto& pr : inst.dissimilar) {
      if (flips.bernoulli(noise_rate)) {
        sim.push_back(pr);
        truth.flipped.push_back(pr);
      } else {
        dis.push_back(pr);
      }
    }
    std::sort(sim.begin(), sim.end());
    std::sort(dis.begin(), dis.end());
    std::sort(truth.flipped.begin(), truth.flipped.end());
    inst.similar = std::move(sim);
    inst.dissimilar = std::move(dis);
  }

  validate_instance(inst);
  return {std::move(inst), std::move(truth)};
}

}  // namespace cml
