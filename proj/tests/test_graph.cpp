#include <doctest.h>

#include <cmath>

#include "cml/graph.hpp"
#include "helpers.hpp"

TEST_CASE("components and hop counts") {
  cml::SimpleGraph g = cml::SimpleGraph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  auto comps = g.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2});
  CHECK(comps[1] == std::vector<int>{3, 4});

  auto hops = g.bfs_hops(0);
  CHECK(hops[2] == 2);
  CHECK(hops[3] == -1);  // unreachable

  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("rho_S is hop count times u") {
  cml::Instance inst = cml_test::complete_instance(
      {"a", "b", "c", "d"}, 0.5, 2.0, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  cml::ConstraintGraphS g = cml::ConstraintGraphS::build(inst);
  auto d = g.rho_from(0);
  CHECK(d[3] == doctest::Approx(1.5));  // 3 hops * u
  CHECK(g.rho_diameter({0, 1, 2, 3}) == doctest::Approx(1.5));
  CHECK(g.rho_diameter({0, 1}) == doctest::Approx(0.5));
}

TEST_CASE("rho across components is unreachable") {
  cml::Instance inst = cml_test::complete_instance(
      {"a", "b", "c", "d"}, 1.0, 2.0, {{"a", "b"}, {"c", "d"}});
  cml::ConstraintGraphS g = cml::ConstraintGraphS::build(inst);
  CHECK(std::isinf(g.rho_from(0)[2]));
  CHECK(g.components().size() == 2);
}
