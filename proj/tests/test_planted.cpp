#include <doctest.h>

#include "cml/errors.hpp"
#include "cml/evaluation.hpp"
#include "cml/instance.hpp"
#include "cml/io.hpp"
#include "cml/oracle.hpp"
#include "cml/planted.hpp"

TEST_CASE("clean planted instances are exactly realized by their ground truth") {
  for (auto host : {cml::HostKind::Line, cml::HostKind::Euclidean, cml::HostKind::Tree}) {
    cml::PlantedOptions opt;
    opt.dim = host == cml::HostKind::Euclidean ? 2 : 1;
    double l = host == cml::HostKind::Tree ? 2.0 : 1.5;
    auto [inst, truth] = cml::generate_planted(host, 10, 1.0, l, 0.0, 17, opt);
    CHECK_NOTHROW(cml::validate_instance(inst));
    CHECK(inst.complete_information());
    CHECK(truth.flipped.empty());
    CHECK(cml::accuracy(inst, truth.ground, 1.0).accuracy == doctest::Approx(1.0));
  }
}

TEST_CASE("clean planted line instances are feasible for the line oracle") {
  auto [inst, truth] = cml::generate_planted(cml::HostKind::Line, 5, 1.0, 1.5, 0.0, 3);
  cml::LineOracleResult res = cml::brute_force_line_feasible(inst);
  CHECK(res.feasible);
}

TEST_CASE("noise flips are recorded and bounded") {
  auto [inst, truth] = cml::generate_planted(cml::HostKind::Tree, 8, 1.0, 2.0, 0.1, 7);
  CHECK_NOTHROW(cml::validate_instance(inst));
  CHECK(inst.complete_information());
  CHECK(truth.flipped.size() <= 28);  // can never exceed C(8,2)
  CHECK(truth.noise_rate == doctest::Approx(0.1));
  // Ground truth violates exactly the flipped pairs at c = 1.
  cml::AccuracyReport r = cml::accuracy(inst, truth.ground, 1.0);
  CHECK(r.violated.size() == truth.flipped.size());
}

TEST_CASE("generation is deterministic per seed") {
  auto a = cml::generate_planted(cml::HostKind::Euclidean, 12, 1.0, 1.4, 0.05, 99,
                                 {.dim = 2});
  auto b = cml::generate_planted(cml::HostKind::Euclidean, 12, 1.0, 1.4, 0.05, 99,
                                 {.dim = 2});
  CHECK(cml::instance_to_json(a.first).dump() == cml::instance_to_json(b.first).dump());
  CHECK(cml::embedding_to_json(a.second.ground).dump() ==
        cml::embedding_to_json(b.second.ground).dump());

  auto c = cml::generate_planted(cml::HostKind::Euclidean, 12, 1.0, 1.4, 0.05, 100,
                                 {.dim = 2});
  CHECK(cml::instance_to_json(a.first).dump() != cml::instance_to_json(c.first).dump());
}

TEST_CASE("an unfillable threshold gap exhausts the retry budget") {
  // Box of side ~l*n leaves plenty of room for the gap (u, l) = (1, 40) only
  // rarely; with a tiny box every draw lands in the gap and generation fails.
  cml::PlantedOptions opt;
  opt.box = 45.0;
  opt.point_retries = 5;
  opt.restarts = 3;
  CHECK_THROWS_AS(
      cml::generate_planted(cml::HostKind::Line, 12, 1.0, 40.0, 0.0, 1, opt),
      cml::GenerationBudgetExceeded);
}

TEST_CASE("tree host requires l within reach of edge lengths") {
  // Tree distances are multiples of u, so l > 2u leaves the gap unavoidable.
  CHECK_THROWS_AS(cml::generate_planted(cml::HostKind::Tree, 6, 1.0, 5.0, 0.0, 1),
                  cml::GenerationBudgetExceeded);
}
