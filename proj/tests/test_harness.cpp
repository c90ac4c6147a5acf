#include <sstream>

#include "doctest.h"
#include "kmatch/errors.hpp"
#include "kmatch/harness.hpp"

using namespace kmatch;
using namespace kmatch::harness;

namespace {

std::string csv_of(const CampaignReport& r) {
  std::ostringstream os;
  write_csv(os, r);
  return os.str();
}

Campaign small_grid(const std::string& pred) {
  Campaign c;
  c.name = "small";
  c.kind = CampaignKind::bound;
  c.mode = Expectation::assert_uniqueness;
  for (const auto& parts : {PartStructure{3, 3}, PartStructure{3, 4}, PartStructure{4, 4}})
    c.cells.push_back(Cell{parts, {2}, Predicate::parse(pred), std::nullopt, std::nullopt});
  return c;
}

}  // namespace

TEST_CASE("campaign json round-trip") {
  Campaign c = builtin_campaign("t-set-bound");
  const json j = to_json(c);
  const Campaign back = campaign_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.cells.size() == c.cells.size());

  const auto parsed = campaign_from_json(json::parse(R"({
    "name": "mine", "kind": "bound", "mode": "assert-equality",
    "cells": [{"parts": [3, 3], "r": 2, "pred": "intersecting:1", "expect_max": "4"},
              {"parts": [3, 3], "sizes": [1, 2], "t": 1}]
  })"));
  CHECK(parsed.name == "mine");
  CHECK(parsed.mode == Expectation::assert_equality);
  REQUIRE(parsed.cells.size() == 2);
  CHECK(parsed.cells[0].expect_max == BigCount(4));
  CHECK(parsed.cells[1].sizes == std::vector<int>{1, 2});
  CHECK_THROWS_AS(campaign_from_json(json::parse(R"({"kind": "nonsense"})")), DomainError);
}

TEST_CASE("bound campaigns pass and are byte-identical across reruns and workers") {
  Campaign c = small_grid("intersecting:1");
  const auto first = run_campaign(c);
  CHECK(first.ok());
  CHECK(first.count(Verdict::pass) == 3);
  c.workers = 3;
  const auto second = run_campaign(c);
  CHECK(csv_of(first) == csv_of(second));
  CHECK(to_json(first).dump() == to_json(second).dump());
  CHECK(first.rows[0].get("max") == "4");
  CHECK(first.rows[1].get("max") == "6");
  CHECK(first.rows[2].get("max") == "9");
}

TEST_CASE("weak predicates give the plain results for k = 2") {
  const auto plain = run_campaign(small_grid("intersecting:1"));
  const auto weak = run_campaign(small_grid("weakly-intersecting:1"));
  REQUIRE(plain.rows.size() == weak.rows.size());
  for (std::size_t i = 0; i < plain.rows.size(); ++i)
    for (const char* key : {"universe", "formula", "max", "status", "maxima", "tally"})
      CHECK(plain.rows[i].get(key) == weak.rows[i].get(key));
}

TEST_CASE("expectation mismatches fail and caps become errors or attention") {
  Campaign c = small_grid("intersecting:1");
  c.mode = Expectation::assert_equality;
  c.cells.resize(1);
  c.cells[0].expect_max = BigCount(5);
  const auto bad = run_campaign(c);
  CHECK(bad.count(Verdict::fail) == 1);
  CHECK_FALSE(bad.ok());

  Campaign capped = small_grid("intersecting:1");
  capped.caps.graph_cap = 10;
  const auto errors = run_campaign(capped);
  CHECK(errors.count(Verdict::error) == 3);
  CHECK_FALSE(errors.ok());
  capped.mode = Expectation::record_only;
  const auto recorded = run_campaign(capped);
  CHECK(recorded.count(Verdict::attention) == 3);
  CHECK(recorded.ok());
}

TEST_CASE("timings only appear on request") {
  const auto r = run_campaign(small_grid("intersecting:1"));
  std::ostringstream plain, timed;
  write_csv(plain, r);
  write_csv(timed, r, true);
  CHECK(plain.str().find("seconds") == std::string::npos);
  CHECK(timed.str().find("seconds") != std::string::npos);
  CHECK_FALSE(to_json(r).dump().find("seconds") != std::string::npos);
}

TEST_CASE("builtin registry") {
  const auto names = builtin_names();
  for (const char* n : {"intersecting-bound", "permutation-intersecting", "t-intersecting-bound", "t-set-bound",
                        "nonuniform-bound", "katona", "ak-regime", "examples", "formulas", "projection-properties",
                        "weak-star", "conj-hi", "conj2", "conj-tset", "conj-nonuniform"})
    CHECK_MESSAGE(std::find(names.begin(), names.end(), n) != names.end(), n);
  CHECK(builtin_campaign("lemma1").kind == CampaignKind::lemma1);
  CHECK_THROWS_AS(builtin_campaign("no-such-campaign"), DomainError);
}

TEST_CASE("example and weak-star suites") {
  const auto ex = run_example_suite();
  CHECK(ex.ok());
  CHECK(ex.count(Verdict::pass) == ex.rows.size());
  const auto ws = run_campaign(builtin_campaign("weak-star"));
  CHECK(ws.ok());
  CHECK(ws.count(Verdict::fail) == 0);
  CHECK_FALSE(ws.find("klein").empty());
}

TEST_CASE("projection-property suite is seeded") {
  const auto a = run_lemma1_suite(200, 5);
  const auto b = run_lemma1_suite(200, 5);
  CHECK(a.ok());
  CHECK(csv_of(a) == csv_of(b));
}

TEST_CASE("katona and ak-regime campaigns") {
  Campaign k = builtin_campaign("katona");
  k.cells.resize(2);
  const auto kr = run_campaign(k);
  CHECK(kr.ok());
  const auto ak = run_campaign(builtin_campaign("ak-regime"));
  CHECK(ak.ok());
  for (const auto& row : ak.rows) {
    const bool small = std::stoi(row.get("n")) < 6;
    CHECK(row.get("status") == (small ? "EXCEEDS_STAR_BOUND" : "MATCHES_STAR_BOUND"));
  }
}
