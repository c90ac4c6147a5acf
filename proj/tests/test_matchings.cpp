#include <algorithm>
#include <set>

#include "doctest.h"
#include "kmatch/combinat.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/matchings.hpp"

using namespace kmatch;

namespace {

// Every r-subset of the edge set that is pairwise disjoint, by brute force.
std::set<Matching> brute_force(const PartStructure& parts, int r) {
  std::vector<std::vector<int>> edges{{}};
  for (int i = 0; i < parts.k(); ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& e : edges)
      for (int v = 1; v <= parts.size(i); ++v) {
        auto f = e;
        f.push_back(v);
        next.push_back(f);
      }
    edges = next;
  }
  std::set<Matching> out;
  std::vector<int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == r) {
      std::vector<std::vector<int>> m;
      for (int i : pick) m.push_back(edges[static_cast<std::size_t>(i)]);
      try {
        out.insert(Matching::from_edges(parts.k(), m));
      } catch (const DomainError&) {
      }
      return;
    }
    for (std::size_t i = from; i < edges.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("part structures") {
  const PartStructure p = PartStructure::parse("3,4,5");
  CHECK(p.k() == 3);
  CHECK(p.size(1) == 4);
  CHECK(p.min() == 3);
  CHECK(p.str() == "3,4,5");
  CHECK(p.without(1) == PartStructure{3, 5});
  CHECK(PartStructure{4, 4}.all_equal(4));
  CHECK_THROWS_AS(PartStructure::parse("3,x"), DomainError);
  CHECK_THROWS_AS(PartStructure({0}), DomainError);
  CHECK_THROWS_AS(PartStructure({65}), DomainError);
}

TEST_CASE("matchings are canonical and validated") {
  const Matching a = Matching::from_edges(2, {{3, 1}, {1, 2}});
  const Matching b{{1, 2}, {3, 1}};
  CHECK(a == b);
  CHECK(a.str() == "{(1,2),(3,1)}");
  CHECK(a.size() == 2);
  CHECK(a.at(1, 0) == 3);
  const std::vector<Vertex> e{1, 2};
  CHECK(a.contains_edge(e));
  CHECK(a.fits(PartStructure{3, 2}));
  CHECK_FALSE(a.fits(PartStructure{2, 2}));
  CHECK_THROWS_AS(Matching::from_edges(2, {{1, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(Matching::from_edges(2, {{1, 1, 1}}), DomainError);
  CHECK_THROWS_AS(Matching::from_edges(2, {{0, 1}}), DomainError);
}

TEST_CASE("universe enumeration agrees with brute force") {
  for (const PartStructure& parts :
       {PartStructure{4}, PartStructure{3, 3}, PartStructure{2, 3}, PartStructure{3, 3, 3}, PartStructure{2, 3, 4},
        PartStructure{4, 4}}) {
    for (int r = 1; r <= parts.min(); ++r) {
      CAPTURE(parts.str());
      CAPTURE(r);
      auto u = Universe::enumerate(parts, r);
      const auto expected = brute_force(parts, r);
      CHECK(u->size() == expected.size());
      CHECK(BigCount(u->size()) == count_matchings(parts.sizes(), r));
      CHECK(std::set<Matching>(u->items().begin(), u->items().end()) == expected);
      // Lexicographic order on canonical edge lists.
      CHECK(std::is_sorted(u->items().begin(), u->items().end(),
                           [](const Matching& x, const Matching& y) { return x.coords() < y.coords(); }));
      for (std::size_t i = 0; i < u->size(); ++i) CHECK(u->index_of((*u)[i]) == i);
    }
  }
}

TEST_CASE("frozen universe sizes") {
  CHECK(Universe::enumerate(PartStructure{4}, 2)->size() == 6);
  CHECK(Universe::enumerate(PartStructure{3, 3}, 2)->size() == 18);
  CHECK(Universe::enumerate(PartStructure{2, 2, 2}, 2)->size() == 4);
  CHECK(Universe::enumerate(PartStructure{3, 3, 3}, 2)->size() == 108);
  CHECK(Universe::enumerate(PartStructure{4, 4, 4}, 4)->size() == 576);
}

TEST_CASE("universe cap reports the predicted size") {
  try {
    Universe::enumerate(PartStructure{8, 8}, 8, 1000);
    FAIL("expected UniverseTooLarge");
  } catch (const UniverseTooLarge& e) {
    CHECK(e.predicted() == "40320");
  }
  CHECK_THROWS_AS(Universe::enumerate(PartStructure{3, 3}, 4), DomainError);
}

TEST_CASE("multi-level universes") {
  auto u = Universe::enumerate_levels(PartStructure{3, 3}, {2, 1});
  CHECK(u->sizes() == std::vector<int>{1, 2});
  CHECK(u->size() == 27);
  CHECK(!u->uniform());
  CHECK_THROWS_AS(u->r(), DomainError);
  const auto [b1, e1] = u->level_range(1);
  const auto [b2, e2] = u->level_range(2);
  CHECK(b1 == 0);
  CHECK(e1 == 9);
  CHECK(b2 == 9);
  CHECK(e2 == 27);
  for (std::size_t i = 0; i < u->size(); ++i) CHECK(u->index_of((*u)[i]) == i);
  auto with_empty = Universe::enumerate_levels(PartStructure{3}, {0, 1, 2, 3});
  CHECK(with_empty->size() == 8);
  CHECK((*with_empty)[0].size() == 0);
}

TEST_CASE("families") {
  auto u = Universe::enumerate(PartStructure{3, 3}, 2);
  Family f(u);
  CHECK(f.empty());
  f.insert(Matching{{1, 1}, {2, 2}});
  f.insert(3);
  CHECK(f.size() == 2);
  CHECK(f.contains(Matching{{1, 1}, {2, 2}}));
  CHECK_THROWS_AS(f.insert(Matching{{1, 1}}), DomainError);
  Family g(Universe::enumerate(PartStructure{3, 3}, 2));
  CHECK_THROWS_AS(f.require_same_universe(g), DomainError);
}

TEST_CASE("projections, reductions and shadows") {
  const Matching p{{1, 2, 3}, {2, 3, 1}};
  const PairProjection pr = project_pair(p, 0, 2);
  CHECK(pr.pairs == Matching{{1, 3}, {2, 1}});
  CHECK(project_pair(p, 2, 0).pairs == Matching{{3, 1}, {1, 2}});
  CHECK(project_all(p, 1) == std::vector<Matching>{Matching{{2, 1}, {3, 2}}, Matching{{2, 3}, {3, 1}}});
  CHECK(drop_part(p, 0) == Matching{{2, 3}, {3, 1}});
  CHECK(drop_part(p, 1) == Matching{{1, 3}, {2, 1}});
  CHECK(vertex_shadow(p, 2) == std::vector<Vertex>{1, 3});
  CHECK(shadow_mask(p, 2) == 0b101);

  // Reductions partition the family; each restriction lives on V_i(X).
  auto u = Universe::enumerate(PartStructure{3, 3, 3}, 2);
  Family all(u);
  for (std::size_t i = 0; i < u->size(); ++i) all.insert(i);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::size_t total = 0;
      for (const auto& [x, projs] : partition_by_reduction(all, i, j)) {
        total += projs.size();
        CHECK(restrict_family(all, i, j, x) == projs);
        for (const auto& pp : projs) CHECK(shadow_mask(pp.pairs, 0) == shadow_mask(x, i < j ? i : i - 1));
      }
      CHECK(total == 108);
    }
}
