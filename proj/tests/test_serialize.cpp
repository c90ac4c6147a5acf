#include <sstream>

#include "doctest.h"
#include "kmatch/constructions.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/serialize.hpp"

using namespace kmatch;

TEST_CASE("matching json round-trip") {
  const Matching m{{2, 1, 3}, {1, 3, 2}};
  const json j = to_json(m);
  CHECK(j.dump() == "[[1,3,2],[2,1,3]]");
  CHECK(matching_from_json(j, 3) == m);
  CHECK(matching_from_json(json::parse("[[2,1,3],[1,3,2]]"), 3) == m);
  CHECK_THROWS_AS(matching_from_json(json::parse("[[1,1],[1,2]]"), 2), DomainError);
  CHECK_THROWS_AS(matching_from_json(json::parse("[[1,2,3]]"), 2), DomainError);
  CHECK_THROWS_AS(matching_from_json(json::parse("{\"a\":1}"), 2), DomainError);
  CHECK_THROWS_AS(matching_from_json(json::parse("[[1,\"x\"]]"), 2), DomainError);
}

TEST_CASE("universe round-trip") {
  for (const auto& parts : {PartStructure{3, 3}, PartStructure{2, 3, 4}}) {
    auto u = Universe::enumerate_levels(parts, {1, 2});
    std::stringstream ss;
    write_universe(ss, *u);
    auto back = read_universe(ss);
    CHECK(back->parts() == u->parts());
    CHECK(back->sizes() == u->sizes());
    CHECK(back->items() == u->items());
  }
}

TEST_CASE("universe reader rejects tampered input") {
  auto u = Universe::enumerate(PartStructure{3, 3}, 2);
  std::stringstream ss;
  write_universe(ss, *u);
  std::string text = ss.str();

  std::string swapped = text;
  const auto first = swapped.find('\n') + 1;
  const auto second = swapped.find('\n', first) + 1;
  const auto third = swapped.find('\n', second) + 1;
  const std::string a = swapped.substr(first, second - first);
  const std::string b = swapped.substr(second, third - second);
  swapped.replace(first, third - first, b + a);
  std::istringstream s1(swapped);
  CHECK_THROWS_AS(read_universe(s1), DomainError);

  std::istringstream s2(text.substr(0, text.size() / 2));
  CHECK_THROWS_AS(read_universe(s2), DomainError);

  std::istringstream s3("not json\n");
  CHECK_THROWS_AS(read_universe(s3), DomainError);

  std::istringstream s4("{\"kind\":\"family\"}\n");
  CHECK_THROWS_AS(read_universe(s4), DomainError);

  std::stringstream big;
  write_universe(big, *Universe::enumerate(PartStructure{4, 4}, 4));
  CHECK_THROWS_AS(read_universe(big, 10), UniverseTooLarge);
}

TEST_CASE("family round-trip in both forms") {
  Family f = klein_family(3);
  for (auto form : {FamilyForm::indices, FamilyForm::explicit_matchings}) {
    std::stringstream ss;
    write_family(ss, f, form);
    Family back = read_family(ss);
    CHECK(back.size() == f.size());
    CHECK(back.members() == f.members());
    CHECK(back.universe().parts() == f.universe().parts());
  }
  Family empty(Universe::enumerate(PartStructure{3, 3}, 2));
  std::stringstream ss;
  write_family(ss, empty);
  CHECK(read_family(ss).empty());
}

TEST_CASE("family reader rejects bad members") {
  std::istringstream bad_index(
      "{\"kind\":\"family\",\"parts\":[3,3],\"sizes\":[2],\"form\":\"indices\",\"size\":1}\n[99]\n");
  CHECK_THROWS_AS(read_family(bad_index), DomainError);
  std::istringstream bad_size(
      "{\"kind\":\"family\",\"parts\":[3,3],\"sizes\":[2],\"form\":\"indices\",\"size\":3}\n[0,1]\n");
  CHECK_THROWS_AS(read_family(bad_size), DomainError);
  std::istringstream bad_form("{\"kind\":\"family\",\"parts\":[3,3],\"sizes\":[2],\"form\":\"bits\",\"size\":0}\n");
  CHECK_THROWS_AS(read_family(bad_form), DomainError);
  std::istringstream foreign(
      "{\"kind\":\"family\",\"parts\":[3,3],\"sizes\":[2],\"form\":\"explicit\",\"size\":1}\n[[1,4],[2,2]]\n");
  CHECK_THROWS_AS(read_family(foreign), DomainError);
}

TEST_CASE("report json carries the required fields") {
  ExtremalOptions opt;
  opt.all_maxima = true;
  const auto rep = extremal(PartStructure{3, 3}, {2}, Predicate{}, opt);
  const json j = to_json(rep);
  for (const char* key : {"parts", "sizes", "predicate", "universe_size", "max_size", "witness",
                          "witness_classification", "formula_value", "status", "all_maxima_count", "tally"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j["status"] == "MATCHES_STAR_BOUND");
  CHECK(j["max_size"] == "4");
  CHECK(j["all_maxima_count"] == 9);
  CHECK(j["tally"]["t-star"] == 9);
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}
