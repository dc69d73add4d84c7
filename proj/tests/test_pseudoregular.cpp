#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "cml/errors.hpp"
#include "cml/pseudoregular.hpp"
#include "cml/rng.hpp"

namespace {

// Independent defect recomputation: walk all 3^n (S, T) assignments and score
// each from scratch. Slow but written without the incremental bookkeeping the
// library uses.
double reference_defect(const cml::SimpleGraph& g,
                        const std::vector<std::vector<int>>& parts) {
  int n = g.n;
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);

  std::size_t k = parts.size();
  std::vector<std::vector<double>> e(k, std::vector<double>(k, 0.0));
  for (auto [a, b] : g.edges) {
    int pa = part_of[static_cast<std::size_t>(a)], pb = part_of[static_cast<std::size_t>(b)];
    e[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)] += 1.0;
    if (pa != pb) e[static_cast<std::size_t>(pb)][static_cast<std::size_t>(pa)] += 1.0;
  }
  std::vector<std::vector<double>> dens(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double denom = double(parts[i].size()) * double(parts[j].size());
      dens[i][j] = (i == j ? 2.0 * e[i][j] : e[i][j]) / denom;
    }

  double best = 0.0;
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    bool has_s = false, has_t = false;
    for (int i = 0; i < n; ++i) {
      side[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3);
      rest /= 3;
      has_s |= side[static_cast<std::size_t>(i)] == 1;
      has_t |= side[static_cast<std::size_t>(i)] == 2;
    }
    if (!has_s || !has_t) continue;
    double actual = 0.0;
    for (auto [a, b] : g.edges) {
      int sa = side[static_cast<std::size_t>(a)], sb = side[static_cast<std::size_t>(b)];
      if ((sa == 1 && sb == 2) || (sa == 2 && sb == 1)) actual += 1.0;
    }
    double predicted = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        double cs = 0.0, ct = 0.0;
        for (int v : parts[i]) cs += side[static_cast<std::size_t>(v)] == 1;
        for (int v : parts[j]) ct += side[static_cast<std::size_t>(v)] == 2;
        predicted += dens[i][j] * cs * ct;
      }
    best = std::max(best, std::fabs(actual - predicted) / (double(n) * double(n)));
  }
  return best;
}

cml::SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
  cml::Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
  return cml::SimpleGraph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("exact defect matches an independent recomputation") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    cml::SimpleGraph g = random_graph(6, 0.5, seed);
    std::vector<std::vector<int>> parts{{0, 2, 4}, {1, 3, 5}};
    cml::DefectWitness w = cml::exact_defect(g, parts);
    CHECK(w.defect == doctest::Approx(reference_defect(g, parts)).epsilon(1e-9));
  }
}

TEST_CASE("singleton partitions have defect exactly zero") {
  cml::SimpleGraph g = random_graph(7, 0.6, 3);
  std::vector<std::vector<int>> singles;
  for (int v = 0; v < 7; ++v) singles.push_back({v});
  CHECK(cml::exact_defect(g, singles).defect == 0.0);
}

TEST_CASE("complete graph with one part has small defect") {
  // Densities predict |S||T|(1 - 1/n); worst case |S| = |T| = n/2 gives
  // (n/2)^2 * (1/n) / n^2 = 1/(4n) <= 1/n.
  int n = 6;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  cml::SimpleGraph g = cml::SimpleGraph::from_edges(n, std::move(edges));
  cml::DefectWitness w = cml::exact_defect(g, {{0, 1, 2, 3, 4, 5}});
  CHECK(w.defect <= 1.0 / n);
  CHECK(w.defect == doctest::Approx(9.0 / 216.0));  // |S| = |T| = 3 extremum
}

TEST_CASE("empty graph partitions into a single part with zero defect") {
  cml::SimpleGraph g = cml::SimpleGraph::from_edges(5, {});
  cml::PseudoregularPartition p = cml::pseudoregular_partition(g, 0.5, 0.25, 1);
  CHECK(p.parts.size() == 1);
  CHECK(p.defect_estimate == 0.0);
}

TEST_CASE("partitions are equitable and meet the target") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    cml::SimpleGraph g = random_graph(12, 0.4, seed + 50);
    cml::PseudoregularPartition p = cml::pseudoregular_partition(g, 0.05, 0.25, seed);
    std::size_t lo = g.n, hi = 0, covered = 0;
    for (const auto& part : p.parts) {
      lo = std::min(lo, part.size());
      hi = std::max(hi, part.size());
      covered += part.size();
    }
    CHECK(hi - lo <= 1);
    CHECK(covered == 12);
    bool ok = p.defect_estimate <= 0.05 || p.parts.size() == 12;
    CHECK(ok);
  }
}

TEST_CASE("sampled estimator never overshoots the exact defect") {
  cml::SimpleGraph g = random_graph(10, 0.5, 77);
  std::vector<std::vector<int>> parts{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
  double exact = cml::exact_defect(g, parts).defect;
  cml::PseudoregularOptions opt;
  opt.exact_defect_limit = 0;  // force the sampling path
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    cml::DefectWitness est = cml::estimate_defect(g, parts, 0.1, 0.25, seed, opt);
    CHECK(est.defect <= exact + 1e-9);
    CHECK(est.defect >= 0.0);
  }
}

TEST_CASE("random graph at n=20 meets a 0.25 target via the estimator") {
  cml::SimpleGraph g = random_graph(20, 0.5, 1);
  cml::PseudoregularPartition p = cml::pseudoregular_partition(g, 0.25, 0.25, 1);
  CHECK(p.defect_estimate <= 0.25);
}

TEST_CASE("common refinement intersects parts") {
  std::vector<std::vector<int>> a{{0, 1}, {2, 3}};
  std::vector<std::vector<int>> b{{0, 2}, {1, 3}};
  auto r = cml::refine_partitions(a, b);
  REQUIRE(r.size() == 4);
  for (const auto& part : r) CHECK(part.size() == 1);

  auto same = cml::refine_partitions(a, a);
  CHECK(same == a);

  std::vector<std::vector<int>> whole{{0, 1, 2, 3}};
  CHECK(cml::refine_partitions(whole, whole) == whole);

  std::vector<std::vector<int>> short_b{{0, 1}};
  CHECK_THROWS_AS(cml::refine_partitions(a, short_b), cml::GroundSetMismatch);
}

TEST_CASE("part cap failure raises PartBudgetExceeded") {
  cml::SimpleGraph g = random_graph(12, 0.5, 9);
  cml::PseudoregularOptions opt;
  opt.part_cap = 2;  // far too few parts for a near-zero target
  CHECK_THROWS_AS(cml::pseudoregular_partition(g, 1e-9, 0.25, 1, opt),
                  cml::PartBudgetExceeded);
}
