// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. argv[1] must point at the command line tool, which the
// determinism criterion drives end to end; everything else runs in process.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cml/errors.hpp"
#include "cml/euclidean_learner.hpp"
#include "cml/evaluation.hpp"
#include "cml/finite_embed.hpp"
#include "cml/graph.hpp"
#include "cml/graph_partition.hpp"
#include "cml/instance.hpp"
#include "cml/io.hpp"
#include "cml/line_learner.hpp"
#include "cml/oracle.hpp"
#include "cml/planted.hpp"
#include "cml/rng.hpp"
#include "cml/tree_learner.hpp"
#include "helpers.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

double elapsed_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string cli_path;  // set from argv[1]

int run_cli(const std::string& args) {
  std::string cmd = "\"" + cli_path + "\" " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -2;
}

// ---------------------------------------------------------------- criterion 1

Criterion line_exactness() {
  Criterion c{"1 line exactness"};
  auto t0 = Clock::now();
  int disagreements = 0, inexact = 0, feasible_seen = 0, total = 0;

  auto check_one = [&](const cml::Instance& inst) {
    ++total;
    cml::LineResult got = cml::learn_line(inst);
    cml::LineOracleResult want = cml::brute_force_line_feasible(inst);
    if (got.feasible != want.feasible) ++disagreements;
    if (got.feasible) {
      ++feasible_seen;
      if (cml::accuracy(inst, *got.embedding, 1.0).accuracy != 1.0) ++inexact;
    }
  };

  for (std::uint64_t i = 0; i < 150; ++i) {
    int n = 2 + static_cast<int>(i % 6);
    auto [inst, truth] =
        cml::generate_planted(cml::HostKind::Line, n, 1.0, 2.0, 0.0, i + 1);
    check_one(inst);
  }
  for (std::uint64_t i = 0; i < 150; ++i) {
    int n = 2 + static_cast<int>(i % 6);
    auto [inst, truth] =
        cml::generate_planted(cml::HostKind::Line, n, 1.0, 2.0, 0.2, 1000 + i);
    check_one(inst);
  }

  c.seconds = elapsed_since(t0);
  c.pass = disagreements == 0 && inexact == 0 && c.seconds < 60.0;
  std::ostringstream os;
  os << total << " instances, " << disagreements << " verdict disagreements, "
     << feasible_seen << " feasible witnesses, " << inexact << " inexact at c=1";
  c.detail = os.str();
  return c;
}

// ---------------------------------------------------------------- criterion 2

Criterion finite_gap() {
  Criterion c{"2 finite embedding gap"};
  auto t0 = Clock::now();
  int within_quarter = 0, within_tenth = 0, exhausted = 0;
  const int cases = 100;

  for (int i = 0; i < cases; ++i) {
    cml::Rng rng(static_cast<std::uint64_t>(i) * 977 + 5);
    int pts = 4 + i % 5;  // |C| in 4..8
    std::vector<std::string> names;
    std::vector<std::vector<double>> xy;
    for (int p = 0; p < pts; ++p) {
      names.push_back("h" + std::to_string(p));
      xy.push_back({rng.uniform(0.0, 4.0), rng.uniform(0.0, 4.0)});
    }
    std::vector<std::vector<double>> dist(static_cast<std::size_t>(pts),
                                          std::vector<double>(static_cast<std::size_t>(pts)));
    for (int a = 0; a < pts; ++a)
      for (int b = 0; b < pts; ++b)
        dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = std::hypot(
            xy[static_cast<std::size_t>(a)][0] - xy[static_cast<std::size_t>(b)][0],
            xy[static_cast<std::size_t>(a)][1] - xy[static_cast<std::size_t>(b)][1]);
    cml::FiniteMetric host = cml::FiniteMetric::from_matrix(names, dist);

    int n = 2 + i % 2;  // |N| in 2..3
    std::vector<std::string> ids;
    for (int v = 0; v < n; ++v) ids.push_back("x" + std::to_string(v));
    std::vector<cml::IdPair> sim;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.bernoulli(0.5))
          sim.push_back({ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]});
    cml::PairSystem sub =
        cml::full_system(cml_test::complete_instance(ids, 1.0, 2.0, sim));

    double opt = cml::brute_force_finite(sub, host, 1.5).accuracy;
    cml::FiniteEmbedResult coarse =
        cml::embed_into_finite_metric(sub, host, 0.25, 0.5, 1u << 20);
    cml::FiniteEmbedResult fine =
        cml::embed_into_finite_metric(sub, host, 0.1, 0.5, 1u << 20);
    exhausted += coarse.budget_exhausted || fine.budget_exhausted;
    if (coarse.accuracy >= opt - 0.25 - 1e-9) ++within_quarter;
    if (fine.accuracy >= opt - 0.1 - 1e-9) ++within_tenth;
  }

  c.seconds = elapsed_since(t0);
  c.pass = within_quarter == cases && within_tenth >= 95 && exhausted == 0 &&
           c.seconds < 300.0;
  std::ostringstream os;
  os << within_quarter << "/" << cases << " within 0.25, " << within_tenth << "/"
     << cases << " within 0.1 (need >= 95), " << exhausted << " budget-limited";
  c.detail = os.str();
  return c;
}

// ---------------------------------------------------------------- criterion 3

Criterion annuli_rate() {
  Criterion c{"3 annuli cut rate"};
  auto t0 = Clock::now();
  const double delta = 8.0 * 1.0 / 0.25;  // 8u / epsilon at u = 1
  int instances_ok = 0, total_instances = 0;
  double worst = 0.0;

  auto run_instance = [&](const cml::Instance& inst, std::uint64_t tag) {
    ++total_instances;
    cml::ConstraintGraphS g = cml::ConstraintGraphS::build(inst);
    std::size_t s_edges = inst.similar.size();
    if (s_edges == 0) {
      ++instances_ok;
      return;
    }
    // Annuli need a connected component; run per component and pool the cuts.
    std::vector<cml::Instance> comps;
    for (const auto& comp : g.components()) {
      if (comp.size() < 2) continue;
      std::vector<std::string> ids;
      for (int v : comp) ids.push_back(g.ids[static_cast<std::size_t>(v)]);
      comps.push_back(cml::subinstance(inst, ids));
    }
    std::uint64_t cut_total = 0;
    const int seeds = 1000;
    for (int s = 0; s < seeds; ++s)
      for (std::size_t k = 0; k < comps.size(); ++k)
        cut_total += cml::annuli_partition(comps[k], delta,
                                           tag * 131071 + static_cast<std::uint64_t>(s) * 31 + k)
                         .cut_similar_pairs.size();
    double frac = static_cast<double>(cut_total) /
                  (static_cast<double>(seeds) * static_cast<double>(s_edges));
    worst = std::max(worst, frac);
    if (frac <= 0.25 / 2.0) ++instances_ok;
  };

  for (std::uint64_t i = 0; i < 10; ++i) {
    int n = 10 + static_cast<int>(i) * 4;  // 10..46
    auto [inst, truth] =
        cml::generate_planted(cml::HostKind::Line, n, 1.0, 2.0, 0.0, 70 + i);
    run_instance(inst, i);
  }
  for (std::uint64_t i = 0; i < 10; ++i) {
    int n = 10 + static_cast<int>(i) * 4;
    cml::PlantedOptions gen;
    gen.dim = 2;
    auto [inst, truth] =
        cml::generate_planted(cml::HostKind::Euclidean, n, 1.0, 2.0, 0.0, 90 + i, gen);
    run_instance(inst, 100 + i);
  }

  c.seconds = elapsed_since(t0);
  c.pass = instances_ok == total_instances && c.seconds < 120.0;
  std::ostringstream os;
  os << instances_ok << "/" << total_instances
     << " instances with mean cut fraction <= 0.125, worst " << worst;
  c.detail = os.str();
  return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion perfect_pipelines() {
  Criterion c{"4 perfect pipelines"};
  auto t0 = Clock::now();

  int euc_ok = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    int n = 14 + static_cast<int>(i % 12);  // 14..25
    cml::PlantedOptions gen;
    gen.dim = 2;
    auto [inst, truth] =
        cml::generate_planted(cml::HostKind::Euclidean, n, 1.0, 2.0, 0.0, 200 + i, gen);
    cml::EuclideanResult res =
        cml::learn_euclidean_perfect(inst, 2, 0.25, 0.5, 300 + i);
    if (res.report.accuracy >= 0.75 - 1e-12) ++euc_ok;
  }
  double euc_seconds = elapsed_since(t0);

  auto t1 = Clock::now();
  int tree_ok = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    int n = 14 + static_cast<int>(i % 12);
    auto [inst, truth] =
        cml::generate_planted(cml::HostKind::Tree, n, 1.0, 2.0, 0.0, 400 + i);
    cml::TreeResult res = cml::learn_tree_perfect(inst, 0.25, 0.5, 500 + i);
    if (res.report.accuracy >= 0.75 - 1e-12) ++tree_ok;
  }
  double tree_seconds = elapsed_since(t1);

  c.seconds = elapsed_since(t0);
  c.pass = euc_ok >= 18 && tree_ok >= 18 && euc_seconds < 600.0 && tree_seconds < 600.0;
  std::ostringstream os;
  os << "euclidean " << euc_ok << "/20 (" << euc_seconds << " s), tree " << tree_ok
     << "/20 (" << tree_seconds << " s), bar accuracy >= 0.75 at c=1.5";
  c.detail = os.str();
  return c;
}

// ------------------------------------------------------- criteria 5, 6 and 7

struct SharedCounters {
  int budget_checked = 0;
  int budget_violations = 0;
};

Criterion imperfect_pipelines(SharedCounters& share) {
  Criterion c{"7 imperfect pipelines"};
  auto t0 = Clock::now();

  auto bar_for = [](const cml::Instance& inst, double zeta) {
    double baseline = static_cast<double>(inst.similar.size()) /
                      static_cast<double>(inst.total_pairs());
    double lg = std::max(std::log(static_cast<double>(inst.n())), 1.0);
    double theory = 1.0 - 5.0 * std::sqrt(zeta) * std::pow(lg, 0.75) - 0.25;
    return std::max(baseline, theory);
  };
  auto note_budget = [&share](double removed, double alpha, std::size_t pairs) {
    ++share.budget_checked;
    if (removed > alpha * static_cast<double>(pairs) + 1e-9) ++share.budget_violations;
  };

  int host_ok[3] = {0, 0, 0};
  for (int host = 0; host < 3; ++host) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      int n = 10 + static_cast<int>(i % 11);  // 10..20
      double zeta = (i % 2 == 0) ? 0.02 : 0.05;
      std::uint64_t gseed = 600 + static_cast<std::uint64_t>(host) * 100 + i;
      double acc = 0.0;
      cml::Instance inst;
      if (host == 2) {
        auto [gi, truth] =
            cml::generate_planted(cml::HostKind::Tree, n, 1.0, 2.0, zeta, gseed);
        inst = gi;
        cml::TreeResult res =
            cml::learn_tree_imperfect(inst, 0.25, 0.5, zeta, gseed + 7);
        acc = res.report.accuracy;
        note_budget(static_cast<double>(res.removed_edges), res.alpha,
                    inst.total_pairs());
      } else {
        int dim = host + 1;
        cml::PlantedOptions gen;
        gen.dim = dim;
        auto [gi, truth] = cml::generate_planted(cml::HostKind::Euclidean, n, 1.0, 2.0,
                                                 zeta, gseed, gen);
        inst = gi;
        cml::EuclideanResult res =
            cml::learn_euclidean_imperfect(inst, dim, 0.25, 0.5, zeta, gseed + 7);
        acc = res.report.accuracy;
        note_budget(static_cast<double>(res.removed_edges), res.alpha,
                    inst.total_pairs());
      }
      if (acc >= bar_for(inst, zeta) - 1e-9) ++host_ok[host];
    }
  }

  c.seconds = elapsed_since(t0);
  c.pass = host_ok[0] >= 18 && host_ok[1] >= 18 && host_ok[2] >= 18;
  std::ostringstream os;
  os << "d=1 " << host_ok[0] << "/20, d=2 " << host_ok[1] << "/20, tree "
     << host_ok[2] << "/20 at the baseline bar";
  c.detail = os.str();
  return c;
}

Criterion well_linked_budget(SharedCounters& share) {
  Criterion c{"5 well-linked budget"};
  auto t0 = Clock::now();

  // Direct invocations over random instances.
  for (std::uint64_t i = 0; i < 30; ++i) {
    cml::Rng rng(i * 271 + 17);
    int n = rng.uniform_int(6, 16);
    std::vector<std::string> ids;
    for (int v = 0; v < n; ++v)
      ids.push_back("o" + std::to_string(v / 10) + std::to_string(v % 10));
    std::vector<cml::IdPair> sim;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.bernoulli(0.4))
          sim.push_back(cml::make_pair_sorted(ids[static_cast<std::size_t>(a)],
                                              ids[static_cast<std::size_t>(b)]));
    cml::Instance inst = cml_test::complete_instance(ids, 1.0, 2.0, sim);
    double alpha = rng.uniform(0.02, 0.5);
    cml::WellLinkedDecomposition d = cml::well_linked_decomposition(inst, alpha);
    ++share.budget_checked;
    if (static_cast<double>(d.removed_edges.size()) > d.edge_budget + 1e-9)
      ++share.budget_violations;
  }

  // Two cliques joined by one bridge: the bridge must be found and removed.
  std::vector<std::string> ids;
  for (int v = 0; v < 10; ++v) ids.push_back(std::string(1, char('a' + v)));
  std::vector<cml::IdPair> sim;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      sim.push_back({ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]});
  for (int a = 5; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      sim.push_back({ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]});
  sim.push_back(cml::make_pair_sorted(ids[0], ids[5]));
  cml::Instance fixture = cml_test::complete_instance(ids, 1.0, 2.0, sim);
  cml::WellLinkedDecomposition d = cml::well_linked_decomposition(fixture, 0.2);
  bool bridge_removed = d.removed_edges.size() == 1 &&
                        d.removed_edges[0] == cml::make_pair_sorted("a", "f") &&
                        d.components.size() == 2;

  c.seconds = elapsed_since(t0);
  c.pass = share.budget_violations == 0 && bridge_removed;
  std::ostringstream os;
  os << share.budget_checked << " invocations checked, " << share.budget_violations
     << " budget violations, bridge fixture " << (bridge_removed ? "split" : "intact");
  c.detail = os.str();
  return c;
}

Criterion core_extraction() {
  Criterion c{"6 core extraction"};
  auto t0 = Clock::now();
  int violations = 0;
  const int fixtures = 200;

  for (std::uint64_t i = 0; i < fixtures; ++i) {
    cml::Rng rng(i * 37 + 3);
    int n = rng.uniform_int(4, 12);
    std::vector<std::string> ids;
    for (int v = 0; v < n; ++v) ids.push_back(std::string(1, char('a' + v)));
    std::vector<cml::IdPair> sim;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.bernoulli(0.55))
          sim.push_back(cml::make_pair_sorted(ids[static_cast<std::size_t>(a)],
                                              ids[static_cast<std::size_t>(b)]));
    cml::Instance inst = cml_test::complete_instance(ids, 1.0, 2.0, sim);
    std::vector<cml::IdPair> suspect;
    for (const auto& e : inst.similar)
      if (rng.bernoulli(0.25)) suspect.push_back(e);

    std::vector<std::string> core =
        cml::extract_core(inst, ids, suspect, rng.uniform(0.01, 0.3));
    std::set<std::string> in(core.begin(), core.end());
    for (const auto& [x, y] : suspect)
      if (in.count(x) && in.count(y)) ++violations;
  }

  c.seconds = elapsed_since(t0);
  c.pass = violations == 0;
  std::ostringstream os;
  os << fixtures << " fixtures, " << violations << " suspect edges inside a core";
  c.detail = os.str();
  return c;
}

// ---------------------------------------------------------------- criterion 8

bool same_bytes(const fs::path& a, const fs::path& b, std::string& why) {
  if (!fs::exists(a) || !fs::exists(b)) {
    why += " " + a.filename().string() + " missing;";
    return false;
  }
  std::string sa = cml::read_text_file(a.string());
  std::string sb = cml::read_text_file(b.string());
  if (sa == sb) return true;
  why += " " + a.filename().string() + " differs;";
  return false;
}

Criterion determinism() {
  Criterion c{"8 determinism"};
  auto t0 = Clock::now();
  std::string why;
  bool ok = true;

  fs::path dir = "acceptance_artifacts";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto at = [&dir](const std::string& name) { return (dir / name).string(); };

  // In-process: identical fits from identical seeds.
  {
    cml::PlantedOptions gen;
    gen.dim = 2;
    auto [inst, truth] =
        cml::generate_planted(cml::HostKind::Euclidean, 14, 1.0, 2.0, 0.0, 77, gen);
    auto a = cml::learn_euclidean_perfect(inst, 2, 0.25, 0.5, 9);
    auto b = cml::learn_euclidean_perfect(inst, 2, 0.25, 0.5, 9);
    if (cml::embedding_to_json(a.embedding).dump() !=
        cml::embedding_to_json(b.embedding).dump()) {
      ok = false;
      why += " in-process euclidean differs;";
    }
    auto [ti, tt] = cml::generate_planted(cml::HostKind::Tree, 12, 1.0, 2.0, 0.0, 78);
    auto ta = cml::learn_tree_perfect(ti, 0.25, 0.5, 9);
    auto tb = cml::learn_tree_perfect(ti, 0.25, 0.5, 9);
    if (cml::embedding_to_json(ta.embedding).dump() !=
        cml::embedding_to_json(tb.embedding).dump()) {
      ok = false;
      why += " in-process tree differs;";
    }
  }

  // CLI round trips: every artifact written twice must match byte for byte.
  auto expect_zero = [&](int code, const std::string& what) {
    if (code != 0) {
      ok = false;
      why += " " + what + " exited " + std::to_string(code) + ";";
    }
  };
  // Learners may stop at the enumeration budget (exit 3) and still emit
  // their best-effort artifact; determinism only needs identical bytes.
  auto expect_fit = [&](int code, const std::string& what) {
    if (code != 0 && code != 3) {
      ok = false;
      why += " " + what + " exited " + std::to_string(code) + ";";
    }
  };
  // partition annuli needs a connected similarity graph, which planted line
  // instances at these parameters rarely have; feed it a fixed path instance.
  {
    cml::Instance ann_inst;
    ann_inst.u = 1.0;
    ann_inst.l = 2.0;
    for (int i = 0; i < 9; ++i) ann_inst.objects.push_back("p" + std::to_string(i));
    for (int i = 0; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j) {
        auto pr = std::make_pair(ann_inst.objects[static_cast<std::size_t>(i)],
                                 ann_inst.objects[static_cast<std::size_t>(j)]);
        (j == i + 1 ? ann_inst.similar : ann_inst.dissimilar).push_back(pr);
      }
    cml::write_text_file(at("inst_ann.json"),
                         cml::instance_to_json(ann_inst).dump(2) + "\n");
  }

  for (int round = 1; round <= 2; ++round) {
    std::string r = std::to_string(round);
    expect_zero(run_cli("generate --host euclidean --dim 2 --n 12 --u 1 --l 2 --seed 5"
                        " --out " + at("inst_e" + r + ".json") +
                        " --truth-out " + at("truth_e" + r + ".json")),
                "generate euclidean");
    expect_zero(run_cli("generate --host tree --n 12 --u 1 --l 2 --noise 0.05 --seed 6"
                        " --out " + at("inst_t" + r + ".json")),
                "generate tree");
    expect_zero(run_cli("generate --host line --n 7 --u 1 --l 2 --seed 7 --out " +
                        at("inst_l" + r + ".json")),
                "generate line");
    expect_fit(run_cli("learn euclidean --in " + at("inst_e1.json") +
                       " --dim 2 --seed 3 --jobs " + (round == 1 ? "1" : "4") +
                       " --out " + at("emb_e" + r + ".json") + " --report-out " +
                       at("rep_e" + r + ".json")),
               "learn euclidean");
    expect_fit(run_cli("learn tree --in " + at("inst_t1.json") +
                       " --zeta 0.05 --seed 4 --out " + at("emb_t" + r + ".json") +
                       " --report-out " + at("rep_t" + r + ".json")),
               "learn tree");
    expect_zero(run_cli("learn line --in " + at("inst_l1.json") + " --out " +
                        at("emb_l" + r + ".json")),
                "learn line");
    expect_zero(run_cli("partition annuli --in " + at("inst_ann.json") +
                        " --delta 4 --seed 11 --out " + at("ann" + r + ".json")),
                "partition annuli");
    expect_zero(run_cli("partition well-linked --in " + at("inst_t1.json") +
                        " --zeta 0.05 --out " + at("wl" + r + ".json")),
                "partition well-linked");
  }
  for (const char* stem : {"inst_e", "truth_e", "inst_t", "inst_l", "emb_e", "rep_e",
                           "emb_t", "rep_t", "emb_l", "ann", "wl"})
    ok = same_bytes(at(std::string(stem) + "1.json"), at(std::string(stem) + "2.json"),
                    why) &&
         ok;

  c.seconds = elapsed_since(t0);
  c.pass = ok;
  c.detail = ok ? "all artifacts byte-identical across reruns (jobs 1 vs 4 included)"
                : "mismatch:" + why;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cml-cli>\n", argv[0]);
    return 64;
  }
  cli_path = argv[1];

  SharedCounters share;
  auto guarded = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      Criterion c{name};
      c.pass = false;
      c.detail = std::string("unhandled error: ") + e.what();
      return c;
    }
  };
  std::vector<Criterion> results;
  results.push_back(guarded("1 line exactness", [] { return line_exactness(); }));
  results.push_back(guarded("2 finite embedding gap", [] { return finite_gap(); }));
  results.push_back(guarded("3 annuli cut rate", [] { return annuli_rate(); }));
  results.push_back(guarded("4 perfect pipelines", [] { return perfect_pipelines(); }));
  // Runs before 5: feeds the budget counters the well-linked criterion audits.
  Criterion c7 =
      guarded("7 imperfect pipelines", [&share] { return imperfect_pipelines(share); });
  results.push_back(
      guarded("5 well-linked budget", [&share] { return well_linked_budget(share); }));
  results.push_back(guarded("6 core extraction", [] { return core_extraction(); }));
  results.push_back(c7);
  results.push_back(guarded("8 determinism", [] { return determinism(); }));

  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.name < b.name; });

  int failures = 0;
  for (const auto& r : results) {
    failures += r.pass ? 0 : 1;
    std::printf("criterion %-28s %s  %s (%.1f s)\n", r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.c_str(), r.seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures;
}
