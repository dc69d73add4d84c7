#include <doctest.h>

#include <string>
#include <vector>

#include "cml/errors.hpp"
#include "cml/evaluation.hpp"
#include "cml/finite_metric.hpp"
#include "cml/oracle.hpp"
#include "cml/rng.hpp"
#include "cml/tree_metric.hpp"
#include "helpers.hpp"

using cml_test::complete_instance;

namespace {

cml::FiniteMetric two_points(double d) {
  return cml::FiniteMetric::from_matrix({"p", "q"}, {{0.0, d}, {d, 0.0}});
}

cml::Embedding line_from_witness(const std::map<std::string, double>& w) {
  cml::Embedding emb = cml::Embedding::line();
  for (const auto& [id, x] : w) emb.coords[id] = {x};
  return emb;
}

}  // namespace

TEST_CASE("finite oracle on hand checked systems") {
  cml::PairSystem dis = cml::full_system(
      complete_instance({"a", "b"}, 1.0, 2.0, {}));
  cml::FiniteOracleResult r = cml::brute_force_finite(dis, two_points(3.0), 1.0);
  CHECK(r.accuracy == 1.0);
  CHECK(r.point_of == std::vector<int>{0, 1});  // lexicographically first optimum
  CHECK(r.evaluated == 4);

  cml::PairSystem sim = cml::full_system(
      complete_instance({"a", "b"}, 1.0, 2.0, {{"a", "b"}}));
  cml::FiniteOracleResult rs = cml::brute_force_finite(sim, two_points(3.0), 1.0);
  CHECK(rs.accuracy == 1.0);
  CHECK(rs.point_of == std::vector<int>{0, 0});

  // Three mutually dissimilar objects cannot all spread over two points.
  cml::PairSystem tri = cml::full_system(
      complete_instance({"a", "b", "c"}, 1.0, 2.0, {}));
  cml::FiniteOracleResult rt = cml::brute_force_finite(tri, two_points(3.0), 1.0);
  CHECK(rt.accuracy == doctest::Approx(2.0 / 3.0));
  CHECK(rt.evaluated == 8);

  CHECK_THROWS_AS(cml::brute_force_finite(tri, two_points(3.0), 1.0, 7),
                  cml::OracleBudgetExceeded);
}

TEST_CASE("line oracle verdicts on frozen instances") {
  std::vector<cml::IdPair> path{{"a", "b"}, {"b", "c"}, {"c", "d"}};
  cml::Instance feasible = complete_instance({"a", "b", "c", "d"}, 1.0, 2.0, path);
  cml::LineOracleResult ok = cml::brute_force_line_feasible(feasible);
  REQUIRE(ok.feasible);
  cml::Embedding emb = line_from_witness(ok.witness);
  CHECK(cml::accuracy(feasible, emb, 1.0).accuracy == 1.0);

  cml::Instance infeasible = complete_instance({"a", "b", "c", "d"}, 1.0, 2.5, path);
  cml::LineOracleResult bad = cml::brute_force_line_feasible(infeasible);
  CHECK(!bad.feasible);
  CHECK(bad.witness.empty());

  cml::Instance pair = complete_instance({"a", "b"}, 1.0, 2.0, {{"a", "b"}});
  CHECK(cml::brute_force_line_feasible(pair).feasible);

  cml::Instance spread = complete_instance({"a", "b", "c"}, 1.0, 1.0, {});
  cml::LineOracleResult sp = cml::brute_force_line_feasible(spread);
  REQUIRE(sp.feasible);
  CHECK(cml::accuracy(spread, line_from_witness(sp.witness), 1.0).accuracy == 1.0);

  CHECK_THROWS_AS(cml::brute_force_line_feasible(infeasible, 2),
                  cml::OracleBudgetExceeded);
}

TEST_CASE("single vertex tree host satisfies exactly the similar pairs") {
  cml::PairSystem sub = cml::full_system(complete_instance(
      {"a", "b", "c", "d"}, 1.0, 2.0, {{"a", "b"}, {"c", "d"}}));
  cml::FiniteOracleResult r = cml::brute_force_tree_small(sub, 0.5, 0, 3, 1.0);
  CHECK(r.accuracy == doctest::Approx(2.0 / 6.0));
}

TEST_CASE("tree oracle equals the finite oracle on the same host") {
  cml::TreeMetric host = cml::canonical_tree(0.5, 1, 2);
  cml::FiniteMetric fm;
  fm.points = host.vertices;
  fm.dist = host.all_pairs();

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    cml::Rng rng(seed + 900);
    std::vector<std::string> ids{"a", "b", "c"};
    std::vector<cml::IdPair> sim;
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (rng.bernoulli(0.5)) sim.push_back({ids[i], ids[j]});
    cml::PairSystem sub = cml::full_system(complete_instance(ids, 1.0, 2.0, sim));
    double c = rng.uniform(1.0, 2.0);
    CHECK(cml::brute_force_tree_small(sub, 0.5, 1, 2, c).accuracy ==
          doctest::Approx(cml::brute_force_finite(sub, fm, c).accuracy));
  }
}
