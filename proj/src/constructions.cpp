#include "kmatch/constructions.hpp"

#include <algorithm>
#include <set>

#include "kmatch/errors.hpp"

namespace kmatch {

namespace {

void annotate_star(Family& f, int t) {
  const Universe& u = f.universe();
  if (u.uniform() && u.r() == t + 1 && u.parts().all_equal(t + 1))
    f.notes.push_back("degenerate-centre: the star is a single matching and its centre is not unique");
  if (u.uniform() && u.r() == t) f.notes.push_back("degenerate-centre: r = t, the star is a single matching");
}

void check_centre_edges(const Universe& u, const Matching& centre) {
  if (centre.arity() != u.parts().k()) throw DomainError("centre arity differs from the universe");
  if (!centre.fits(u.parts())) throw DomainError("centre edge outside the part structure");
  if (centre.size() < 1) throw DomainError("centre needs at least one edge");
}

}  // namespace

Family t_star(const UniversePtr& u, const Matching& centre) {
  check_centre_edges(*u, centre);
  const int t = centre.size();
  if (t > u->sizes().back()) throw DomainError("centre larger than every matching in the universe");
  Family f(u);
  for (std::size_t idx = 0; idx < u->size(); ++idx) {
    const Matching& p = (*u)[idx];
    bool all = true;
    for (int e = 0; e < t && all; ++e) all = p.contains_edge(centre.edge(e));
    if (all) f.insert(idx);
  }
  annotate_star(f, t);
  return f;
}

Family t_set_star(const UniversePtr& u, const BoxCentre& box) {
  box.validate(u->parts());
  const int t = box.t();
  if (!u->uniform()) throw DomainError("t-set-stars are defined on uniform universes");
  if (t > u->r()) throw DomainError("box side t exceeds r");
  Family f(u);
  for (std::size_t idx = 0; idx < u->size(); ++idx)
    if (box.edges_inside((*u)[idx]) == t) f.insert(idx);
  if (u->r() == 2 * t && u->parts().all_equal(2 * t))
    f.notes.push_back("ambiguous-centre: the complementary box " + box.complement(u->parts()).str() +
                      " defines the same family");
  return f;
}

int semi_star_cover(const std::vector<PairCentre>& centres, bool set_variant) {
  std::uint64_t cover = 0;
  for (const auto& c : centres) {
    if (set_variant) {
      if (!c.box) throw DomainError("set variant needs box centres");
      cover |= c.box->mask(0);
    } else {
      if (!c.pairs) throw DomainError("edge variant needs pair centres");
      cover |= shadow_mask(*c.pairs, 0);
    }
  }
  return std::popcount(cover);
}

Family semi_star(const UniversePtr& u, const std::vector<PairCentre>& centres, bool set_variant,
                 std::optional<int> distinguished) {
  const PartStructure& parts = u->parts();
  if (parts.k() < 2) throw DomainError("semi-stars need k >= 2");
  if (!u->uniform()) throw DomainError("semi-stars are defined on uniform universes");
  const int d = distinguished.value_or(parts.k() - 1);
  if (d < 0 || d >= parts.k()) throw DomainError("distinguished part out of range");

  std::optional<int> t;
  std::set<int> seen;
  for (const auto& c : centres) {
    if (c.part == d || c.part < 0 || c.part >= parts.k()) throw DomainError("pair centre names an invalid part");
    if (!seen.insert(c.part).second) throw DomainError("two pair centres for the same part");
    const PartStructure pair_parts{parts.size(d), parts.size(c.part)};
    int ct = 0;
    if (set_variant) {
      if (!c.box) throw DomainError("set variant needs box centres");
      c.box->validate(pair_parts);
      ct = c.box->t();
    } else {
      if (!c.pairs || c.pairs->arity() != 2) throw DomainError("edge variant needs arity-2 pair centres");
      if (!c.pairs->fits(pair_parts)) throw DomainError("pair centre outside its projection");
      ct = c.pairs->size();
    }
    if (ct < 1 || (t && *t != ct)) throw DomainError("pair centres must all have the same positive size t");
    t = ct;
  }
  if (!t) throw DomainError("semi-star needs at least one pair centre");
  if (*t > u->r()) throw DomainError("pair centre larger than r");

  Family f(u);
  for (std::size_t idx = 0; idx < u->size(); ++idx) {
    const Matching& p = (*u)[idx];
    bool ok = true;
    for (std::size_t c = 0; c < centres.size() && ok; ++c) {
      const Matching proj = project_pair(p, d, centres[c].part).pairs;
      if (set_variant) {
        ok = centres[c].box->edges_inside(proj) == *t;
      } else {
        for (int e = 0; e < *t && ok; ++e) ok = proj.contains_edge(centres[c].pairs->edge(e));
      }
    }
    if (ok) f.insert(idx);
  }
  return f;
}

Family ak_family(int n, int r, int t, int i, std::uint64_t cap) {
  if (i < 0 || t < 1 || t + 2 * i > n) throw DomainError("ak family needs t >= 1, i >= 0 and t + 2i <= n");
  if (r < 1 || r > n) throw DomainError("ak family needs 1 <= r <= n");
  auto u = Universe::enumerate(PartStructure{n}, r, cap);
  const int m = t + 2 * i;
  Family f(u);
  for (std::size_t idx = 0; idx < u->size(); ++idx) {
    const Matching& p = (*u)[idx];
    int inside = 0;
    for (int e = 0; e < p.size(); ++e) inside += p.at(e, 0) <= m;
    if (inside >= t + i) f.insert(idx);
  }
  return f;
}

Family gi_family(int n, int t, int i, std::uint64_t cap) {
  if (t + 2 * i > n) throw DomainError("fixed-point family needs t + 2i <= n");
  auto u = Universe::enumerate(PartStructure{n, n}, n, cap);
  return hi_family(u, t, i);
}

Matching diagonal_base(const PartStructure& parts) {
  std::vector<std::vector<int>> edges;
  for (int x = 1; x <= parts.min(); ++x) edges.emplace_back(static_cast<std::size_t>(parts.k()), x);
  return Matching::from_edges(parts.k(), edges);
}

Family hi_family(const UniversePtr& u, int t, int i, const std::optional<std::vector<Edge>>& base) {
  const PartStructure& parts = u->parts();
  std::vector<Edge> order = base ? *base : diagonal_base(parts).edges();
  if (static_cast<int>(order.size()) != parts.min()) throw DomainError("base must be a matching of size min part");
  {
    std::vector<std::vector<int>> check;
    for (const auto& e : order) check.emplace_back(e.begin(), e.end());
    Matching m = Matching::from_edges(parts.k(), check);  // validates disjointness
    if (!m.fits(parts)) throw DomainError("base edge outside the part structure");
  }
  if (t < 1 || i < 0 || t + 2 * i > static_cast<int>(order.size()))
    throw DomainError("hi family needs t >= 1, i >= 0 and t + 2i <= |base|");
  const std::size_t l = static_cast<std::size_t>(t + 2 * i);
  Family f(u);
  for (std::size_t idx = 0; idx < u->size(); ++idx) {
    const Matching& p = (*u)[idx];
    int inside = 0;
    for (std::size_t e = 0; e < l; ++e) inside += p.contains_edge(order[e]);
    if (inside >= t + i) f.insert(idx);
  }
  return f;
}

UniversePtr power_set_universe(int n, bool include_empty) {
  std::vector<int> sizes;
  for (int r = include_empty ? 0 : 1; r <= n; ++r) sizes.push_back(r);
  return Universe::enumerate_levels(PartStructure{n}, sizes);
}

Family katona_family(int n, int l, std::optional<int> x, bool include_empty) {
  if (l < 0 || l > n) throw DomainError("katona family needs 0 <= l <= n");
  if (x && (*x < 1 || *x > n)) throw DomainError("katona vertex x out of range");
  auto u = power_set_universe(n, include_empty);
  Family f(u);
  for (std::size_t idx = 0; idx < u->size(); ++idx) {
    const Matching& a = (*u)[idx];
    int size = a.size();
    if (x)
      for (int e = 0; e < a.size(); ++e) size -= a.at(e, 0) == *x;
    if (size >= l) f.insert(idx);
  }
  return f;
}

std::vector<std::vector<int>> klein_group() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

Family klein_family(int k, std::uint64_t cap) {
  if (k < 2) throw DomainError("klein family needs k >= 2");
  std::vector<int> four(static_cast<std::size_t>(k), 4);
  auto u = Universe::enumerate(PartStructure(four), 4, cap);
  Family f(u);
  const auto group = klein_group();
  std::vector<std::size_t> choice(static_cast<std::size_t>(k - 1), 0);
  while (true) {
    std::vector<std::vector<int>> edges;
    for (int x = 0; x < 4; ++x) {
      std::vector<int> e{x + 1};
      for (std::size_t j = 0; j < choice.size(); ++j) e.push_back(group[choice[j]][static_cast<std::size_t>(x)] + 1);
      edges.push_back(std::move(e));
    }
    f.insert(Matching::from_edges(k, edges));
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == group.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return f;
}

Family non_uniform_star(const PartStructure& parts, const std::vector<int>& sizes, const Matching& centre,
                        std::uint64_t cap) {
  if (sizes.empty()) throw DomainError("no levels given");
  if (centre.size() > *std::min_element(sizes.begin(), sizes.end()))
    throw DomainError("centre size t exceeds the smallest level");
  auto u = Universe::enumerate_levels(parts, sizes, cap);
  return t_star(u, centre);
}

}  // namespace kmatch
