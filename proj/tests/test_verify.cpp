#include <catch2/catch_amalgamated.hpp>

#include "pel/report_io.hpp"
#include "pel/verify.hpp"

using namespace pel;

#ifndef PEL_DATA_DIR
#define PEL_DATA_DIR "data"
#endif

TEST_CASE("m10 claim") {
  VerificationOutcome out = verify_m10();
  REQUIRE(out.pass);
  REQUIRE_FALSE(out.computed.empty());
}

TEST_CASE("gt tower: exact censuses at t <= 2 match the closed form") {
  TowerEvaluation ev = verify_towers(TowerSpec::Family::Gt, 12);
  REQUIRE(ev.pass);
  REQUIRE(ev.exact_depths == std::vector<unsigned>{1, 2});
  REQUIRE(ev.exact_values[0] == Rational(496, 720));
  REQUIRE(ev.exact_values[1] == Rational(148096, 259200));
  REQUIRE(ev.closed_values[0] == ev.exact_values[0]);
  REQUIRE(ev.closed_values[1] == ev.exact_values[1]);
  REQUIRE(ev.limit == Rational(1, 2));
  REQUIRE(ev.monotone);
}

TEST_CASE("yt tower: full enumeration at t <= 1 and the 2^{t+1} bound") {
  TowerEvaluation ev = verify_towers(TowerSpec::Family::Yt, 3);
  REQUIRE(ev.pass);
  REQUIRE(ev.exact_depths == std::vector<unsigned>{0, 1});
  REQUIRE(ev.exact_values[0] == Rational(496, 720));
  // census(Y_1) = (|Y_1| - |N|) + 136^2 = 388800 + 18496
  REQUIRE(ev.exact_values[1] == Rational(407296, 518400));
  REQUIRE(ev.exact_values[1] >= Rational(3, 4));
}

TEST_CASE("xu tower: truncated products increase toward 1") {
  TowerEvaluation ev = verify_towers(TowerSpec::Family::Xu, 8);
  REQUIRE(ev.pass);
  REQUIRE(ev.closed_values.front() < ev.closed_values.back());
  REQUIRE(ev.closed_values.back() < 1);
}

TEST_CASE("metacyclic tower: census equals the closed form and the gap is 1/(2*3^m)") {
  TowerEvaluation ev = verify_towers(TowerSpec::Family::metacyclic, 6);
  REQUIRE(ev.pass);
  REQUIRE(ev.exact_depths.size() == 6);
  REQUIRE(ev.closed_values[0] == Rational(2, 3));
  REQUIRE(ev.limit == Rational(1, 2));
}

TEST_CASE("l23 and corx3") {
  VerificationOutcome out = verify_l23_corx3();
  REQUIRE(out.pass);
}

TEST_CASE("anchepsl at f = 2") {
  VerificationOutcome out = verify_anchepsl(2);
  REQUIRE(out.pass);
  REQUIRE_THROWS_AS(verify_anchepsl(3), std::invalid_argument);
}

TEST_CASE("podd corpus file loads and every entry passes") {
  auto corpus = load_podd_corpus(std::string(PEL_DATA_DIR) + "/podd_corpus.txt");
  REQUIRE(corpus.size() == 4);
  for (const auto& out : verify_podd(corpus)) {
    CAPTURE(out.relation);
    REQUIRE(out.pass);
    bool skipped = false;
    for (const auto& [k, v] : out.params) skipped = skipped || v == "skipped";
    REQUIRE_FALSE(skipped);  // all hypotheses hold on the checked-in corpus
  }
}

TEST_CASE("podd reports hypothesis violations as skipped") {
  // A4 is solvable, so the triple must be skipped, not failed.
  VerificationOutcome solvable = verify_podd_entry({"sym:4", "alt:4", 3});
  REQUIRE(solvable.pass);
  bool skipped = false;
  for (const auto& [k, v] : solvable.params) skipped = skipped || v == "skipped";
  REQUIRE(skipped);

  VerificationOutcome even = verify_podd_entry({"sym:5", "alt:5", 2});
  REQUIRE(even.pass);
  skipped = false;
  for (const auto& [k, v] : even.params) skipped = skipped || v == "skipped";
  REQUIRE(skipped);
}

TEST_CASE("section4 corpus file loads and every entry passes") {
  auto corpus = load_section4_corpus(std::string(PEL_DATA_DIR) + "/section4_corpus.txt");
  REQUIRE(corpus.size() == 16);
  for (const auto& out : verify_local_section4(corpus)) {
    CAPTURE(out.claim, out.relation);
    REQUIRE(out.pass);
    REQUIRE_FALSE(out.computed.empty());
  }
}

TEST_CASE("gxfinite instances give the exact quotients 1/3 and 1/4") {
  VerificationOutcome s3 = verify_section4_entry({"gxfinite", "sym:3", "alt:3", 2});
  REQUIRE(s3.pass);
  bool found = false;
  for (const auto& [name, value] : s3.computed)
    if (name == "lhs") {
      REQUIRE(value == "1/3");
      found = true;
    }
  REQUIRE(found);

  VerificationOutcome a4 = verify_section4_entry({"gxfinite", "alt:4", "op:2", 3});
  REQUIRE(a4.pass);
  for (const auto& [name, value] : a4.computed)
    if (name == "lhs") REQUIRE(value == "1/4");
}

TEST_CASE("onlypsl negatives") {
  auto outcomes = verify_onlypsl_negatives();
  REQUIRE(outcomes.size() == 8);
  for (const auto& out : outcomes) REQUIRE(out.pass);
}

TEST_CASE("an proportions") {
  VerificationOutcome out = verify_an_proportions(16);
  REQUIRE(out.pass);
}

TEST_CASE("no check passes vacuously: every outcome carries computed values") {
  for (const auto& out : run_all_checks(PEL_DATA_DIR)) {
    CAPTURE(out.claim);
    bool skipped = false;
    for (const auto& [k, v] : out.params) skipped = skipped || v == "skipped";
    if (!skipped) REQUIRE_FALSE(out.computed.empty());
    REQUIRE(out.pass);
  }
}

TEST_CASE("outcomes are reproducible") {
  VerificationOutcome a = verify_m10(), b = verify_m10();
  REQUIRE(a.computed == b.computed);
  REQUIRE(outcome_line(a, OutputFormat::json, false) ==
          outcome_line(b, OutputFormat::json, false));
}

TEST_CASE("report serialization shapes") {
  VerificationOutcome out = verify_m10();
  std::string json = outcome_line(out, OutputFormat::json, false);
  REQUIRE(json.front() == '{');
  REQUIRE(json.find("\"claim\":\"m10-census\"") != std::string::npos);
  REQUIRE(json.find("\"pass\":true") != std::string::npos);
  REQUIRE(json.find("\"ms\":0") != std::string::npos);

  CensusReport census;
  census.group = "m10";
  census.prime = 2;
  census.order = 720;
  census.count = 496;
  census.probability = Rational(496, 720);
  REQUIRE(census_line(census, OutputFormat::json) ==
          R"({"group":"m10","prime":2,"count":496,"order":720,"probability":"31/45"})");
  REQUIRE(census_line(census, OutputFormat::csv) == "m10,2,496,720,31/45");
}
