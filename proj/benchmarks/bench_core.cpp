#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "cml/evaluation.hpp"
#include "cml/finite_embed.hpp"
#include "cml/graph_partition.hpp"
#include "cml/instance.hpp"
#include "cml/line_learner.hpp"
#include "cml/planted.hpp"
#include "cml/pseudoregular.hpp"
#include "cml/rng.hpp"
#include "cml/tree_learner.hpp"

namespace {

cml::SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
  cml::Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
  return cml::SimpleGraph::from_edges(n, std::move(edges));
}

std::vector<std::vector<int>> halves(int n) {
  std::vector<std::vector<int>> parts(2);
  for (int v = 0; v < n; ++v) parts[static_cast<std::size_t>(v % 2)].push_back(v);
  return parts;
}

void BM_evaluate(benchmark::State& state) {
  cml::PlantedOptions gen;
  gen.dim = 2;
  auto [inst, truth] =
      cml::generate_planted(cml::HostKind::Euclidean, 50, 1.0, 2.0, 0.0, 1, gen);
  for (auto _ : state)
    benchmark::DoNotOptimize(cml::accuracy(inst, truth.ground, 1.0).accuracy);
}
BENCHMARK(BM_evaluate);

void BM_exact_defect(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  cml::SimpleGraph g = random_graph(n, 0.5, 7);
  auto parts = halves(n);
  for (auto _ : state) benchmark::DoNotOptimize(cml::exact_defect(g, parts).defect);
}
BENCHMARK(BM_exact_defect)->Arg(8)->Arg(10)->Arg(12);

void BM_estimate_defect(benchmark::State& state) {
  cml::SimpleGraph g = random_graph(40, 0.3, 9);
  auto parts = halves(40);
  cml::PseudoregularOptions opt;
  opt.exact_defect_limit = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(cml::estimate_defect(g, parts, 0.25, 0.25, 3, opt).defect);
}
BENCHMARK(BM_estimate_defect);

void BM_sparsest_cut_exact(benchmark::State& state) {
  cml::SimpleGraph g = random_graph(12, 0.4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(cml::sparsest_cut(g).sparsity);
}
BENCHMARK(BM_sparsest_cut_exact);

void BM_sparsest_cut_sweep(benchmark::State& state) {
  cml::SimpleGraph g = random_graph(60, 0.15, 13);
  for (auto _ : state) benchmark::DoNotOptimize(cml::sparsest_cut(g).sparsity);
}
BENCHMARK(BM_sparsest_cut_sweep);

void BM_finite_embed(benchmark::State& state) {
  auto [inst, truth] = cml::generate_planted(cml::HostKind::Line, 8, 1.0, 2.0, 0.0, 5);
  cml::PairSystem sub = cml::full_system(inst);
  cml::FiniteMetric host;
  int pts = 25;
  host.points.reserve(static_cast<std::size_t>(pts));
  host.dist.assign(static_cast<std::size_t>(pts),
                   std::vector<double>(static_cast<std::size_t>(pts), 0.0));
  for (int i = 0; i < pts; ++i) host.points.push_back("p" + std::to_string(i));
  for (int i = 0; i < pts; ++i)
    for (int j = 0; j < pts; ++j)
      host.dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          0.25 * std::abs(i - j);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cml::embed_into_finite_metric(sub, host, 0.25, 0.5,
                                      static_cast<std::uint64_t>(state.range(0)))
            .accuracy);
}
BENCHMARK(BM_finite_embed)->Arg(256)->Arg(4096);

void BM_line_learner(benchmark::State& state) {
  auto [inst, truth] = cml::generate_planted(cml::HostKind::Line, 7, 1.0, 2.0, 0.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cml::learn_line(inst).feasible);
}
BENCHMARK(BM_line_learner);

void BM_annuli(benchmark::State& state) {
  // Connected path instance; annuli need one similarity component.
  std::vector<std::string> ids;
  for (int i = 0; i < 40; ++i)
    ids.push_back("o" + std::to_string(i / 10) + std::to_string(i % 10));
  cml::Instance inst;
  inst.objects = ids;
  inst.u = 1.0;
  inst.l = 2.0;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      auto p = cml::make_pair_sorted(ids[i], ids[j]);
      (j == i + 1 ? inst.similar : inst.dissimilar).push_back(p);
    }
  inst.reindex();
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        cml::annuli_partition(inst, 32.0, seed++).cut_similar_pairs.size());
}
BENCHMARK(BM_annuli);

}  // namespace

BENCHMARK_MAIN();
