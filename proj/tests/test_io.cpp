#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "burnside/io.hpp"
#include "burnside/pipeline.hpp"

using namespace burnside;

TEST_CASE("group JSON round trip is canonical") {
  FiniteGroup g = FiniteGroup::cyclic(12);
  json j = group_to_json(g);
  FiniteGroup back = group_from_json(j);
  CHECK(back.n == 12);
  CHECK(back.table == g.table);
  std::string once = canonical_dump(j);
  std::string twice = canonical_dump(group_to_json(group_from_json(json::parse(once))));
  CHECK(once == twice);
}

TEST_CASE("schema violations are format errors, bad math is not") {
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"table": [[0]]})")), FormatError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"order": 2, "table": [[0, 1]]})")), FormatError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"order": 2, "table": [[0, 5], [1, 0]]})")), FormatError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"order": 2, "table": [[0, 1], [1, 0]], "p_hint": "x"})")),
                  FormatError);
  // structurally fine, mathematically broken: row repeats an element
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"order": 3, "table": [[0,1,2],[1,0,0],[2,2,1]]})")),
                  std::invalid_argument);
}

TEST_CASE("triality file round trip certifies") {
  TrialityGroup t = abelian_doubling(FiniteGroup::cyclic(5));
  json j = triality_to_json(t);
  CHECK(j["order"] == 25);
  CHECK(j["rho"].size() == 25);
  TrialityGroup back = read_triality_json(j);
  CHECK(verify_triality(back.G, back.rho, back.sigma).all_passed());
  json broken = j;
  broken.erase("sigma");
  CHECK_THROWS_AS(read_triality_json(broken), FormatError);
  broken = j;
  broken["sigma"][0] = 1;  // repeats an index
  broken["sigma"][1] = 1;
  CHECK_THROWS_AS(read_triality_json(broken), FormatError);
}

TEST_CASE("constructor descriptors expand through the library") {
  json c5 = {{"construct", "cyclic"}, {"n", 5}};
  CHECK(group_from_descriptor(c5).n == 5);
  CHECK(group_from_descriptor({{"construct", "heisenberg"}, {"p", 5}}).n == 125);
  json prod = {{"construct", "direct_product"}, {"factors", {c5, c5}}};
  CHECK(group_from_descriptor(prod).n == 25);
  TrialityGroup t = triality_from_descriptor({{"construct", "abelian_doubling"}, {"base", c5}});
  CHECK(t.G.n == 25);
  CHECK(verify_triality(t.G, t.rho, t.sigma).all_passed());
  CHECK_THROWS_AS(group_from_descriptor({{"construct", "frobenius"}}), FormatError);
  CHECK_THROWS_AS(triality_from_descriptor({{"construct", "abelian_doubling"}}), FormatError);
}

TEST_CASE("unified input reader handles groups and the algebra example") {
  TrialityInput g = read_input_json({{"construct", "abelian_doubling"},
                                     {"base", {{"construct", "cyclic"}, {"n", 7}}}},
                                    "ad_c7");
  REQUIRE(g.group.has_value());
  CHECK(g.p() == 7);

  TrialityInput a = read_input_json({{"construct", "example_4"}, {"p", 5}, {"sigma_sign", -1}}, "ex4");
  REQUIRE(a.algebra.has_value());
  CHECK(a.expected_failures == std::vector<std::string>{"Lemma 3.1: triality_identity", "Lemma 4.4: lemma_4_4"});
}

TEST_CASE("loop JSON mirrors the group schema without associativity") {
  TrialityGroup t = abelian_doubling(FiniteGroup::cyclic(5));
  LoopExtraction ex = moufang_from_triality(t);
  json j = loop_to_json(ex.loop);
  Loop back = loop_from_json(j);
  CHECK(back.n == 5);
  CHECK(back.table == ex.loop.table);
  CHECK_THROWS_AS(loop_from_json(json::parse(R"({"order": 2, "table": [[1, 0], [0, 1]]})")),
                  std::invalid_argument);  // identity not at index 0: math, not format
}

TEST_CASE("pipeline report serializes with seed and verdict") {
  TrialityGroup t = abelian_doubling(FiniteGroup::elementary_abelian(5, 2));
  PipelineReport r = run_pipeline(t, 5, 1, "ad_c5xc5");
  CHECK_FALSE(r.has_fail());
  CHECK(r.p_pow_dim_h == 25);
  CHECK(r.u_order == 25);
  CHECK(r.h_nilpotent);
  CHECK(r.h_class == 1);
  json j = r.to_json();
  CHECK(j["verdict"] == "pass");
  CHECK(j["seed"] == config().seed);
  CHECK(j["checks"].size() == r.rows.size());
  CHECK(r.text().find("VERDICT: pass") != std::string::npos);
}

TEST_CASE("pipeline refuses a non-p-group for the requested prime") {
  TrialityGroup t = abelian_doubling(FiniteGroup::cyclic(7));
  CHECK_THROWS_AS(run_pipeline(t, 5, 1, "ad_c7"), std::invalid_argument);
  CHECK_FALSE(run_pipeline(t, 7, 1, "ad_c7").has_fail());
}
