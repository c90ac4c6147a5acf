#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "harness/common.hpp"
#include "kmatch/combinat.hpp"
#include "kmatch/constructions.hpp"
#include "kmatch/errors.hpp"

namespace kmatch::harness {
namespace {

// Unbiased draw from [0, n) by rejection.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

struct ProjectionViolations {
  std::uint64_t reduction = 0;    // (i) R_j(F) weakly t-intersecting
  std::uint64_t restriction = 0;  // (i) F_|X t-intersecting
  std::uint64_t shadow = 0;       // (ii)
  std::uint64_t projection = 0;   // (iii)
  std::uint64_t partition = 0;    // (iv)
  std::uint64_t total() const { return reduction + restriction + shadow + projection + partition; }
};

void check_projection_properties(const Family& f, int t, ProjectionViolations& v) {
  const int k = f.universe().parts().k();
  const std::vector<Matching> members = f.members();
  for (int i = 0; i < k; ++i) {
    std::set<std::vector<Matching>> images;
    for (const auto& p : members) images.insert(project_all(p, i));
    if (images.size() != members.size()) ++v.projection;

    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      std::set<Matching> reduced;
      for (const auto& p : members) reduced.insert(drop_part(p, j));
      const std::vector<Matching> red(reduced.begin(), reduced.end());
      for (std::size_t a = 0; a < red.size(); ++a)
        for (std::size_t b = a + 1; b < red.size(); ++b)
          if (!weakly_intersects_t(red[a], red[b], t)) ++v.reduction;

      std::size_t sum = 0;
      const int xi = i < j ? i : i - 1;
      for (const auto& [x, projs] : partition_by_reduction(f, i, j)) {
        sum += projs.size();
        for (std::size_t a = 0; a < projs.size(); ++a) {
          if (shadow_mask(projs[a].pairs, 0) != shadow_mask(x, xi)) ++v.shadow;
          for (std::size_t b = a + 1; b < projs.size(); ++b)
            if (!intersects_t(projs[a].pairs, projs[b].pairs, t)) ++v.restriction;
        }
      }
      if (sum != members.size()) ++v.partition;
    }
  }
}

void fill_violations(Row& row, const ProjectionViolations& v) {
  row.set("reduction_violations", v.reduction);
  row.set("restriction_violations", v.restriction);
  row.set("shadow_violations", v.shadow);
  row.set("projection_violations", v.projection);
  row.set("partition_violations", v.partition);
  row.verdict = v.total() == 0 ? Verdict::pass : Verdict::fail;
  if (v.total()) row.note = std::to_string(v.total()) + " violations";
}

}  // namespace

CampaignReport run_lemma1_suite(std::uint64_t samples, std::uint64_t seed) {
  CampaignReport rep;
  rep.name = "projection-properties";
  rep.mode = Expectation::assert_equality;
  rep.meta["engine_version"] = KMATCH_VERSION;
  rep.meta["samples"] = samples;
  rep.meta["seed"] = seed;

  struct Grid {
    PartStructure parts;
    int r, t;
  };
  std::vector<Grid> grid;
  for (const PartStructure& parts : {PartStructure{3, 3}, PartStructure{3, 3, 3}})
    for (int r : {2, 3})
      for (int t = 1; t <= std::min(2, r); ++t) grid.push_back({parts, r, t});

  std::vector<UniversePtr> universes;
  for (const auto& g : grid) universes.push_back(Universe::enumerate(g.parts, g.r));
  std::vector<ProjectionViolations> viol(grid.size());
  std::vector<std::uint64_t> count(grid.size(), 0), member_total(grid.size(), 0);

  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::size_t c = s % grid.size();
    const UniversePtr& u = universes[c];
    const Predicate pred{PredicateKind::weakly_intersecting, grid[c].t};
    std::vector<std::size_t> order(u->size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[draw(rng, i)]);
    const std::size_t target = 1 + draw(rng, 12);

    Family f(u);
    std::vector<std::size_t> chosen;
    for (std::size_t idx : order) {
      if (chosen.size() == target) break;
      const Matching& p = (*u)[idx];
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t q) { return pred.holds(p, (*u)[q]); })) {
        chosen.push_back(idx);
        f.insert(idx);
      }
    }
    if (!family_satisfies(f, pred)) throw InternalError("sampled family is not predicate-closed");
    check_projection_properties(f, grid[c].t, viol[c]);
    ++count[c];
    member_total[c] += chosen.size();
  }

  for (std::size_t c = 0; c < grid.size(); ++c) {
    Row row;
    row.label = "random (" + grid[c].parts.str() + ") r=" + std::to_string(grid[c].r) + " t=" + std::to_string(grid[c].t);
    row.set("parts", grid[c].parts.str()).set("r", grid[c].r).set("t", grid[c].t);
    row.set("families", count[c]).set("members", member_total[c]);
    fill_violations(row, viol[c]);
    rep.rows.push_back(std::move(row));
  }

  {
    auto u = Universe::enumerate(PartStructure{3, 3, 3}, 2);
    Family full(u);
    for (std::size_t i = 0; i < u->size(); ++i) full.insert(i);
    Row row;
    row.label = "full universe (3,3,3) r=2 partition identity";
    std::size_t worst = 0;
    bool all = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        std::size_t sum = 0;
        for (const auto& [x, projs] : partition_by_reduction(full, i, j)) sum += projs.size();
        all = all && sum == full.size();
        worst = std::max(worst, sum);
      }
    row.set("size", full.size()).set("sum", worst);
    row.verdict = all && full.size() == 108 ? Verdict::pass : Verdict::fail;
    rep.rows.push_back(std::move(row));
  }
  {
    auto u = Universe::enumerate(PartStructure{3, 3, 3}, 2);
    ProjectionViolations v;
    for (std::size_t i = 0; i < u->size(); ++i) {
      Family single(u);
      single.insert(i);
      check_projection_properties(single, 2, v);
    }
    Row row;
    row.label = "singletons (3,3,3) r=2";
    row.set("families", u->size());
    fill_violations(row, v);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

CampaignReport run_weak_star_suite(const std::vector<Cell>& cells, std::uint64_t system_cap) {
  CampaignReport rep;
  rep.name = "weak-star";
  rep.mode = Expectation::assert_equality;
  rep.meta["engine_version"] = KMATCH_VERSION;
  rep.meta["system_cap"] = system_cap;

  for (const Cell& cell : cells) {
    detail::Stopwatch clock;
    Row row;
    const int r = cell.sizes.front();
    const int t = cell.pred.t;
    const PartStructure& parts = cell.parts;
    const int k = parts.k();
    row.label = "(" + parts.str() + ") r=" + std::to_string(r) + " t=" + std::to_string(t);
    row.set("parts", parts.str()).set("r", r).set("t", t);
    if (r == t || (r == t + 1 && parts.all_equal(t + 1))) {
      row.verdict = Verdict::skipped;
      row.note = r == t ? "r = t: every t-intersecting family is a single matching"
                        : "r = t+1 with all parts of size t+1: stars are single matchings with non-unique centres";
      rep.rows.push_back(std::move(row));
      continue;
    }

    auto u = Universe::enumerate(parts, r);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    // members[p][c]: universe members whose (i, j) projection contains centre c.
    std::vector<std::vector<Bitset>> members(pairs.size());
    std::vector<std::size_t> radix(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [i, j] = pairs[p];
      auto centres = Universe::enumerate(PartStructure{parts.size(i), parts.size(j)}, t);
      radix[p] = centres->size();
      for (const Matching& c : centres->items()) {
        Bitset b(u->size());
        for (std::size_t idx = 0; idx < u->size(); ++idx) {
          const Matching proj = project_pair((*u)[idx], i, j).pairs;
          bool all = true;
          for (int e = 0; e < t && all; ++e) all = proj.contains_edge(c.edge(e));
          if (all) b.set(idx);
        }
        members[p].push_back(std::move(b));
      }
    }

    BigCount total_systems = 1;
    for (auto r_ : radix) total_systems *= BigCount(r_);
    const bool partial = total_systems > BigCount(system_cap);
    const std::uint64_t limit = partial ? system_cap : total_systems.to_u64();

    std::uint64_t nonempty = 0, weak = 0, stars = 0, violations = 0;
    std::vector<std::size_t> digit(pairs.size(), 0);
    for (std::uint64_t s = 0; s < limit; ++s) {
      Bitset fam = members[0][digit[0]];
      for (std::size_t p = 1; p < pairs.size(); ++p) fam &= members[p][digit[p]];
      if (fam.any()) {
        ++nonempty;
        const StarClassification c = classify_star(Family(u, fam), t);
        if (c.weak_t_star) {
          ++weak;
          if (c.t_star) ++stars;
          else ++violations;
        }
      }
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (++digit[p] < radix[p]) break;
        digit[p] = 0;
      }
    }
    row.set("systems", limit).set("consistent", nonempty).set("weak_stars", weak).set("stars", stars);
    row.verdict = violations == 0 ? Verdict::pass : Verdict::fail;
    if (violations) row.note = std::to_string(violations) + " weak t-stars that are not t-stars";
    else if (partial) row.note = "partial: " + std::to_string(limit) + " of " + total_systems.str() + " systems";
    row.seconds = clock.seconds();
    rep.rows.push_back(std::move(row));
  }

  {
    // The set analogue of unique maximality fails: this family is weakly
    // 2-set-intersecting, as large as a 2-set-star, and not one.
    const Family klein = klein_family(3);
    const StarClassification c = classify_star(klein, 2);
    const bool weak = family_satisfies(klein, Predicate{PredicateKind::weakly_set_intersecting, 2});
    const bool strong = family_satisfies(klein, Predicate{PredicateKind::set_intersecting, 2});
    const BigCount star = t_set_star_size(std::vector<int>{4, 4, 4}, 4, 2);
    Row row;
    row.label = "klein k=3 set analogue";
    row.set("size", klein.size()).set("set_star_size", star);
    row.set("weakly_set_intersecting_2", weak).set("set_intersecting_2", strong);
    row.set("t_set_star", c.t_set_star).set("weak_t_set_star", c.weak_t_set_star);
    const bool detected = weak && !strong && BigCount(klein.size()) == star && !c.t_set_star;
    row.verdict = detected ? Verdict::recorded : Verdict::fail;
    row.note = detected ? "weakly 2-set-intersecting family of 2-set-star size that is not a 2-set-star"
                        : "set-analogue counterexample not detected";
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

CampaignReport run_example_suite() {
  CampaignReport rep;
  rep.name = "examples";
  rep.mode = Expectation::assert_equality;
  rep.meta["engine_version"] = KMATCH_VERSION;

  {
    const Matching p{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
    const Matching q{{1, 1, 4}, {2, 4, 2}, {4, 3, 3}};
    Row row;
    row.label = "weak versus plain intersection";
    const bool weak = weakly_intersects_t(p, q, 1), plain = intersects_t(p, q, 1);
    row.set("P", p.str()).set("Q", q.str()).set("weakly_intersect", weak).set("intersect", plain);
    row.verdict = weak && !plain ? Verdict::pass : Verdict::fail;
    rep.rows.push_back(std::move(row));
  }
  {
    const Family g1 = gi_family(8, 4, 1);
    const BigCount formula = gi_size(8, 4, 1);
    const BigCount star4 = t_star_size(std::vector<int>{8, 8}, 8, 4);
    const BigCount star2 = t_star_size(std::vector<int>{8, 8}, 8, 2);
    Row row;
    row.label = "fixed-point family n=8 t=4 i=1";
    row.set("size", g1.size()).set("formula", formula).set("quoted", "26 = 13 x 2!");
    row.set("star_t4", star4).set("star_t2_literal", star2).set("quoted_star", "24 = 4!");
    row.set("t_intersecting", family_satisfies(g1, Predicate{PredicateKind::intersecting, 4}));
    const bool ok = g1.size() == 26 && formula == 26 && star4 == 24 && BigCount(g1.size()) > star4;
    row.verdict = ok ? Verdict::pass : Verdict::fail;
    row.note = "quoted star size 24 matches a 4-star; the literal 2-star reading gives " + star2.str();
    rep.rows.push_back(std::move(row));
  }
  {
    const Family s = klein_family(2);
    const StarClassification c = classify_star(s, 2);
    const bool setint = family_satisfies(s, Predicate{PredicateKind::set_intersecting, 2});
    Row row;
    row.label = "klein group k=2";
    row.set("size", s.size()).set("quoted", "4").set("set_intersecting_2", setint).set("t_set_star", c.t_set_star);
    row.set("classification", to_string(c.kind));
    row.verdict = s.size() == 4 && setint && !c.t_set_star ? Verdict::pass : Verdict::fail;
    rep.rows.push_back(std::move(row));
  }
  {
    const Family f = klein_family(3);
    const Matching diag{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}, {4, 4, 4}};
    const Matching w{{1, 2, 3}, {2, 1, 4}, {3, 4, 1}, {4, 3, 2}};
    const bool weak = family_satisfies(f, Predicate{PredicateKind::weakly_set_intersecting, 2});
    const bool strong = family_satisfies(f, Predicate{PredicateKind::set_intersecting, 2});
    const bool pair = set_intersects_t(diag, w, 2);
    const BigCount star = t_set_star_size(std::vector<int>{4, 4, 4}, 4, 2);
    Row row;
    row.label = "klein family k=3";
    row.set("size", f.size()).set("quoted", "16 = 2^(2k-2)").set("set_star_size", star);
    row.set("weakly_set_intersecting_2", weak).set("set_intersecting_2", strong);
    row.set("witness_in_family", f.contains(diag) && f.contains(w)).set("witness_set_intersect", pair);
    const bool ok = f.size() == 16 && star == 16 && weak && !strong && f.contains(diag) && f.contains(w) && !pair;
    row.verdict = ok ? Verdict::pass : Verdict::fail;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace {

Matching diagonal_centre(int k, int t) {
  std::vector<std::vector<int>> edges;
  for (int e = 1; e <= t; ++e) edges.emplace_back(static_cast<std::size_t>(k), e);
  return Matching::from_edges(k, edges);
}

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int x = a; x <= b; ++x) v.push_back(x);
  return v;
}

Row compare(const std::string& label, std::size_t built, const BigCount& formula) {
  Row row;
  row.label = label;
  row.set("size", built).set("formula", formula);
  row.verdict = BigCount(built) == formula ? Verdict::pass : Verdict::fail;
  return row;
}

}  // namespace

CampaignReport run_formula_suite() {
  CampaignReport rep;
  rep.name = "formulas";
  rep.mode = Expectation::assert_equality;
  rep.meta["engine_version"] = KMATCH_VERSION;
  auto add = [&](Row row) { rep.rows.push_back(std::move(row)); };

  const std::vector<PartStructure> grid = {{3, 3}, {3, 4}, {4, 4}, {2, 3, 4}, {3, 3, 3}, {4, 4, 4}, {5}, {6}};
  for (const auto& parts : grid)
    for (int r = 1; r <= parts.min(); ++r) {
      auto u = Universe::enumerate(parts, r);
      add(compare("universe (" + parts.str() + ") r=" + std::to_string(r), u->size(),
                  count_matchings(parts.sizes(), r)));
      for (int t = 1; t <= r; ++t) {
        const std::string cell = "(" + parts.str() + ") r=" + std::to_string(r) + " t=" + std::to_string(t);
        add(compare("t-star " + cell, t_star(u, diagonal_centre(parts.k(), t)).size(),
                    t_star_size(parts.sizes(), r, t)));
        std::vector<std::vector<int>> box(static_cast<std::size_t>(parts.k()), range(1, t));
        add(compare("t-set-star " + cell, t_set_star(u, BoxCentre::from_sets(box)).size(),
                    t_set_star_size(parts.sizes(), r, t)));
      }
    }

  // Semi-stars: centres on (last part, j) whose last-part shadows cover u vertices.
  const std::vector<PartStructure> semi_grid = {{3, 3}, {4, 4}, {3, 3, 3}, {4, 4, 4}, {3, 4, 5}};
  for (const auto& parts : semi_grid) {
    const int k = parts.k();
    for (int r = 1; r <= parts.min(); ++r) {
      auto u = Universe::enumerate(parts, r);
      for (int t = 1; t <= std::min(2, r); ++t)
        for (int cover = t; cover <= std::min(t + 1, r); ++cover) {
          if (cover > t && k < 3) continue;
          for (bool set_variant : {false, true}) {
            std::vector<PairCentre> centres;
            for (int j = 0; j + 1 < k; ++j) {
              const int shift = (j > 0 && cover > t) ? 1 : 0;
              PairCentre c;
              c.part = j;
              if (set_variant) {
                c.box = BoxCentre::from_sets({range(1 + shift, t + shift), range(1, t)});
              } else {
                std::vector<std::vector<int>> pairs;
                for (int e = 1; e <= t; ++e) pairs.push_back({e + shift, e});
                c.pairs = Matching::from_edges(2, pairs);
              }
              centres.push_back(std::move(c));
            }
            const int ucount = semi_star_cover(centres, set_variant);
            const std::string label = std::string(set_variant ? "semi-set-star " : "semi-star ") + "(" + parts.str() +
                                      ") r=" + std::to_string(r) + " t=" + std::to_string(t) +
                                      " u=" + std::to_string(ucount);
            add(compare(label, semi_star(u, centres, set_variant).size(),
                        semi_star_size(parts.sizes(), r, t, ucount, set_variant)));
          }
        }
    }
  }

  for (int n = 4; n <= 9; ++n)
    for (int r = 2; r <= 4 && r <= n; ++r)
      for (int t = 1; t < r; ++t)
        for (int i = 0; t + 2 * i <= n; ++i)
          add(compare("ak n=" + std::to_string(n) + " r=" + std::to_string(r) + " t=" + std::to_string(t) +
                          " i=" + std::to_string(i),
                      ak_family(n, r, t, i).size(), ak_family_size(n, r, t, i)));

  for (int n = 3; n <= 6; ++n)
    for (int t = 1; t <= n; ++t)
      for (int i = 0; t + 2 * i <= n; ++i)
        add(compare("fixed-points n=" + std::to_string(n) + " t=" + std::to_string(t) + " i=" + std::to_string(i),
                    gi_family(n, t, i).size(), gi_size(n, t, i)));

  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= n; ++l) {
      const auto [al, alx] = katona_sizes(n, l);
      const std::string cell = "n=" + std::to_string(n) + " l=" + std::to_string(l);
      add(compare("katona A_l " + cell, katona_family(n, l).size(), al));
      add(compare("katona A_l,x " + cell, katona_family(n, l, 1).size(), alx));
    }

  for (int k = 2; k <= 3; ++k) {
    BigCount expected = 1;
    for (int j = 1; j < k; ++j) expected *= 4;
    add(compare("klein k=" + std::to_string(k), klein_family(k).size(), expected));
  }

  struct NonUniform {
    PartStructure parts;
    std::vector<int> sizes;
    int t;
  };
  for (const auto& c : std::vector<NonUniform>{{{3, 3}, {1, 2}, 1},
                                               {{3, 3, 3}, {1, 2}, 1},
                                               {{4, 4}, {2, 3}, 2},
                                               {{3, 3}, {1, 2, 3}, 1},
                                               {{4, 4, 4}, {2, 3}, 1}}) {
    BigCount sum;
    for (int r : c.sizes) sum += t_star_size(c.parts.sizes(), r, c.t);
    add(compare("non-uniform star (" + c.parts.str() + ") R={" + sizes_str(c.sizes) + "} t=" + std::to_string(c.t),
                non_uniform_star(c.parts, c.sizes, diagonal_centre(c.parts.k(), c.t)).size(), sum));
  }
  return rep;
}

}  // namespace kmatch::harness
