#include <doctest.h>

#include "cml/errors.hpp"
#include "cml/instance.hpp"
#include "helpers.hpp"

using cml_test::make_instance;

TEST_CASE("two objects with one similar pair are complete") {
  cml::Instance inst = make_instance({"a", "b"}, 1.0, 2.0, {{"a", "b"}}, {});
  CHECK(inst.n() == 2);
  CHECK(inst.complete_information());
  CHECK_NOTHROW(cml::validate_instance(inst));
}

TEST_CASE("self pair is rejected") {
  cml::Instance inst = make_instance({"a", "b"}, 1.0, 2.0, {{"a", "a"}}, {});
  CHECK_THROWS_AS(cml::validate_instance(inst), cml::InvalidInstance);
}

TEST_CASE("pair in both label sets is rejected") {
  cml::Instance inst =
      make_instance({"a", "b"}, 1.0, 2.0, {{"a", "b"}}, {{"a", "b"}});
  CHECK_THROWS_AS(cml::validate_instance(inst), cml::InvalidInstance);
}

TEST_CASE("duplicate object ids are rejected") {
  cml::Instance inst = make_instance({"a", "a", "b"}, 1.0, 2.0, {}, {});
  CHECK_THROWS_AS(cml::validate_instance(inst), cml::InvalidInstance);
}

TEST_CASE("pair naming an unknown object is rejected") {
  cml::Instance inst = make_instance({"a", "b"}, 1.0, 2.0, {{"a", "z"}}, {});
  CHECK_THROWS_AS(cml::validate_instance(inst), cml::InvalidInstance);
}

TEST_CASE("nonpositive thresholds are rejected") {
  cml::Instance inst = make_instance({"a", "b"}, 0.0, 2.0, {{"a", "b"}}, {});
  CHECK_THROWS_AS(cml::validate_instance(inst), cml::InvalidInstance);
}

TEST_CASE("validation report covers completeness and S-graph shape") {
  cml::Instance path =
      make_instance({"a", "b", "c"}, 1.0, 2.0, {{"a", "b"}, {"b", "c"}}, {{"a", "c"}});
  cml::ValidationReport r = cml::validate(path);
  CHECK(r.complete);
  CHECK(r.s_graph_connected);
  CHECK(r.n_similar == 2);
  CHECK(r.n_dissimilar == 1);

  cml::Instance partial = make_instance({"a", "b", "c"}, 1.0, 2.0, {{"a", "b"}}, {{"a", "c"}});
  CHECK_FALSE(cml::validate(partial).complete);

  // Two S-components, the remaining four pairs dissimilar.
  cml::Instance two = make_instance(
      {"a", "b", "c", "d"}, 1.0, 2.0, {{"a", "b"}, {"c", "d"}},
      {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  cml::ValidationReport r2 = cml::validate(two);
  CHECK(r2.complete);
  CHECK(r2.s_graph_components == 2);
  CHECK_FALSE(r2.s_graph_connected);
}

TEST_CASE("make_pair_sorted orders lexicographically") {
  CHECK(cml::make_pair_sorted("b", "a") == cml::IdPair{"a", "b"});
  CHECK(cml::make_pair_sorted("a", "b") == cml::IdPair{"a", "b"});
}

TEST_CASE("index lookups follow sorted id order") {
  cml::Instance inst = make_instance({"c", "a", "b"}, 1.0, 2.0, {}, {});
  CHECK(inst.sorted_ids() == std::vector<std::string>{"a", "b", "c"});
  CHECK(inst.index_of("b").value() == 1);
  CHECK_FALSE(inst.index_of("z").has_value());
  CHECK(inst.index_of_checked("c") == 2);
  CHECK_THROWS_AS(inst.index_of_checked("z"), cml::InvalidParameter);
}

TEST_CASE("restrict_to keeps only pairs inside the subset") {
  cml::Instance inst = cml_test::complete_instance(
      {"a", "b", "c", "d"}, 1.0, 2.0, {{"a", "b"}, {"b", "c"}});
  cml::PairSystem sub = cml::restrict_to(inst, {"a", "b", "d"});
  CHECK(sub.n() == 3);
  CHECK(sub.similar.size() == 1);     // only (a,b) survives
  CHECK(sub.dissimilar.size() == 2);  // (a,d), (b,d)
  CHECK(sub.similar[0] == std::pair<int, int>{0, 1});

  cml::PairSystem all = cml::full_system(inst);
  CHECK(all.n() == 4);
  CHECK(all.similar.size() + all.dissimilar.size() == inst.total_pairs());
}
