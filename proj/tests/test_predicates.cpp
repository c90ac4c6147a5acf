#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "kmatch/constructions.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/predicates.hpp"

using namespace kmatch;

namespace {

std::vector<std::vector<int>> subsets(int n, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

int inside(const Matching& p, const std::vector<std::vector<int>>& box) {
  int c = 0;
  for (int e = 0; e < p.size(); ++e) {
    bool in = true;
    for (int i = 0; i < p.arity() && in; ++i) {
      const auto& s = box[static_cast<std::size_t>(i)];
      in = std::find(s.begin(), s.end(), p.at(e, i)) != s.end();
    }
    c += in;
  }
  return c;
}

// Tries every box of t-subsets.
bool box_oracle(const PartStructure& parts, const Matching& p, const Matching& q, int t) {
  std::vector<std::vector<std::vector<int>>> choices;
  for (int i = 0; i < parts.k(); ++i) choices.push_back(subsets(parts.size(i), t));
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<std::vector<int>> box;
    for (std::size_t i = 0; i < pick.size(); ++i) box.push_back(choices[i][pick[i]]);
    if (inside(p, box) == t && inside(q, box) == t) return true;
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
    if (pos == pick.size()) return false;
  }
}

int common_edges(const Matching& p, const Matching& q) {
  std::set<std::vector<Vertex>> a;
  for (const auto& e : p.edges()) a.insert(e);
  int c = 0;
  for (const auto& e : q.edges()) c += a.count(e) > 0;
  return c;
}

Matching pair_of(const Matching& p, int i, int j) {
  std::vector<std::vector<int>> edges;
  for (int e = 0; e < p.size(); ++e) edges.push_back({p.at(e, i), p.at(e, j)});
  return Matching::from_edges(2, edges);
}

PartStructure pair_parts(const PartStructure& parts, int i, int j) { return PartStructure{parts.size(i), parts.size(j)}; }

}  // namespace

TEST_CASE("predicate parse and str") {
  CHECK(Predicate::parse("intersecting") == Predicate{PredicateKind::intersecting, 1});
  CHECK(Predicate::parse("weakly-set-intersecting:2") == Predicate{PredicateKind::weakly_set_intersecting, 2});
  CHECK(Predicate::parse("set-intersecting:3").str() == "set-intersecting:3");
  CHECK(Predicate::parse("weakly-intersecting:1").weak_kind());
  CHECK(Predicate::parse("set-intersecting:1").set_kind());
  CHECK_FALSE(Predicate::parse("intersecting:2").inferred_definition());
  CHECK_THROWS_AS(Predicate::parse("crossing:2"), DomainError);
  CHECK_THROWS_AS(Predicate::parse("intersecting:0"), DomainError);
  CHECK_THROWS_AS(Predicate::parse("intersecting:x"), DomainError);
}

TEST_CASE("intersects_t matches edge counting") {
  for (const auto& parts : {PartStructure{3, 4}, PartStructure{3, 3, 3}}) {
    auto u = Universe::enumerate(parts, 3);
    for (std::size_t a = 0; a < u->size(); ++a)
      for (std::size_t b = 0; b < u->size(); b += 3)
        for (int t = 1; t <= 3; ++t)
          CHECK(intersects_t((*u)[a], (*u)[b], t) == (common_edges((*u)[a], (*u)[b]) >= t));
  }
}

TEST_CASE("set_intersects_t agrees with the box oracle") {
  std::mt19937_64 rng(11);
  for (const auto& parts : {PartStructure{4, 4}, PartStructure{3, 4}, PartStructure{3, 3, 3}, PartStructure{4, 4, 4}}) {
    for (int r = 2; r <= 3; ++r) {
      auto u = Universe::enumerate(parts, r);
      std::uniform_int_distribution<std::size_t> pick(0, u->size() - 1);
      for (int n = 0; n < 150; ++n) {
        const Matching& p = (*u)[pick(rng)];
        const Matching& q = (*u)[pick(rng)];
        for (int t = 1; t <= r; ++t) {
          INFO(parts.str(), " r=", r, " t=", t, " ", p.str(), " ", q.str());
          CHECK(set_intersects_t(p, q, t) == box_oracle(parts, p, q, t));
        }
      }
    }
  }
}

TEST_CASE("weak predicates agree with projection-wise oracles") {
  std::mt19937_64 rng(5);
  const PartStructure parts{3, 3, 4};
  auto u = Universe::enumerate(parts, 2);
  std::uniform_int_distribution<std::size_t> pick(0, u->size() - 1);
  for (int n = 0; n < 300; ++n) {
    const Matching& p = (*u)[pick(rng)];
    const Matching& q = (*u)[pick(rng)];
    for (int t = 1; t <= 2; ++t) {
      bool weak = true;
      bool weak_set = true;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          weak = weak && common_edges(pair_of(p, i, j), pair_of(q, i, j)) >= t;
          weak_set = weak_set && box_oracle(pair_parts(parts, i, j), pair_of(p, i, j), pair_of(q, i, j), t);
        }
      CHECK(weakly_intersects_t(p, q, t) == weak);
      CHECK(weakly_set_intersects_t(p, q, t) == weak_set);
      if (intersects_t(p, q, t)) CHECK(weakly_intersects_t(p, q, t));
      if (set_intersects_t(p, q, t)) CHECK(weakly_set_intersects_t(p, q, t));
    }
  }
}

TEST_CASE("weak predicates reduce to plain ones for k = 2") {
  auto u = Universe::enumerate(PartStructure{4, 4}, 3);
  for (std::size_t a = 0; a < u->size(); a += 5)
    for (std::size_t b = 0; b < u->size(); b += 7)
      for (int t = 1; t <= 3; ++t) {
        CHECK(weakly_intersects_t((*u)[a], (*u)[b], t) == intersects_t((*u)[a], (*u)[b], t));
        CHECK(weakly_set_intersects_t((*u)[a], (*u)[b], t) == set_intersects_t((*u)[a], (*u)[b], t));
      }
}

TEST_CASE("weakly intersecting is strictly weaker for k = 3") {
  const Matching p{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}};
  const Matching q{{1, 1, 2}, {2, 3, 3}, {3, 4, 1}, {4, 2, 4}};
  CHECK_FALSE(intersects_t(p, q, 1));
  CHECK(weakly_intersects_t(p, q, 1));
  CHECK_FALSE(weakly_intersects_t(p, q, 2));
  CHECK_FALSE(weakly_intersects_t(p, Matching{{1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {4, 1, 2}}, 1));
}

TEST_CASE("the standard weak but not plain pair") {
  const Matching p{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
  const Matching q{{1, 1, 4}, {2, 4, 2}, {4, 3, 3}};
  CHECK_FALSE(intersects_t(p, q, 1));
  CHECK(weakly_intersects_t(p, q, 1));
}

TEST_CASE("set_intersects_t edge cases") {
  const Matching p{{1, 1}, {2, 2}};
  const Matching q{{1, 2}, {2, 1}};
  CHECK(set_intersects_t(p, q, 2));
  CHECK_FALSE(intersects_t(p, q, 1));
  CHECK_THROWS_AS(set_intersects_t(p, q, 3), DomainError);
  const Predicate pred{PredicateKind::set_intersecting, 3};
  CHECK_FALSE(pred.holds(p, q));
}

TEST_CASE("family_satisfies on stars and their complements") {
  auto u = Universe::enumerate(PartStructure{3, 3}, 2);
  Family star = t_star(u, Matching{{1, 1}});
  CHECK(family_satisfies(star, Predicate{}));
  CHECK(star.size() == 4);
  Family bad = star;
  bad.insert(Matching{{2, 2}, {3, 3}});
  CHECK_FALSE(family_satisfies(bad, Predicate{}));
  Family empty(u);
  CHECK(family_satisfies(empty, Predicate{}));
}

TEST_CASE("cross set-intersection") {
  auto u = Universe::enumerate(PartStructure{4, 4}, 2);
  const auto box = BoxCentre::from_sets({{1, 2}, {1, 2}});
  Family g = t_set_star(u, box);
  CHECK(cross_set_intersecting(g, g, 2));
  Family h(u);
  h.insert(Matching{{3, 3}, {4, 4}});
  CHECK_FALSE(cross_set_intersecting(g, h, 2));
  auto u3 = Universe::enumerate(PartStructure{4, 4}, 3);
  CHECK_THROWS(cross_set_intersecting(g, Family(u3), 2));
}

TEST_CASE("classify recognises stars") {
  auto u = Universe::enumerate(PartStructure{3, 3, 3}, 2);
  auto c = classify_star(t_star(u, Matching{{1, 2, 3}}), 1);
  CHECK(c.kind == StarKind::t_star);
  CHECK(c.t_star);
  CHECK(c.weak_t_star);
  REQUIRE(c.star_centres.size() == 1);
  CHECK(c.star_centres[0] == Matching{{1, 2, 3}});

  auto u44 = Universe::enumerate(PartStructure{4, 4}, 4);
  auto s = classify_star(t_set_star(u44, BoxCentre::from_sets({{1, 2}, {3, 4}})), 2);
  CHECK(s.kind == StarKind::t_set_star);
  CHECK(s.ambiguous_box);
  CHECK(s.set_star_centres.size() == 2);

  Family odd(u);
  odd.insert(Matching{{1, 1, 1}, {2, 2, 2}});
  odd.insert(Matching{{1, 1, 1}, {3, 3, 3}});
  CHECK(classify_star(odd, 1).kind == StarKind::none);
}

TEST_CASE("classify flags degenerate centres") {
  auto u = Universe::enumerate(PartStructure{2, 2}, 2);
  Family single(u);
  single.insert(Matching{{1, 1}, {2, 2}});
  auto c = classify_star(single, 1);
  CHECK(c.t_star);
  CHECK(c.degenerate_centre);
  CHECK(c.star_centres.size() == 2);
}

TEST_CASE("project_family collects distinct projections") {
  std::vector<Matching> members{Matching{{1, 1, 1}, {2, 2, 2}}, Matching{{1, 1, 2}, {2, 2, 1}}};
  auto proj = project_family(members, 0, 1);
  CHECK(proj.size() == 1);
  CHECK(project_family(members, 0, 2).size() == 2);
}
