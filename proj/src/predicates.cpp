#include "kmatch/predicates.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "kmatch/errors.hpp"

namespace kmatch {

namespace {

void check_pair(const Matching& p, const Matching& q, int t) {
  if (p.arity() != q.arity()) throw DomainError("matchings come from different part structures");
  if (t < 1) throw DomainError("t must be >= 1");
}

/// Calls f(indices) for every t-subset of {0..m-1} in lexicographic order;
/// stops early when f returns true. Returns whether it stopped.
bool any_combination(int m, int t, const std::function<bool(std::span<const int>)>& f) {
  if (t > m) return false;
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (f(idx)) return true;
    int pos = t - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - t + pos) --pos;
    if (pos < 0) return false;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < t; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

inline std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

/// Edges of `p` whose every coordinate lies in the corresponding shadow of
/// `other`; only those can sit in a common box.
std::vector<int> box_candidates(const Matching& p, const std::vector<std::uint64_t>& other_shadow) {
  std::vector<int> out;
  for (int e = 0; e < p.size(); ++e) {
    bool ok = true;
    for (int i = 0; i < p.arity() && ok; ++i) ok = other_shadow[static_cast<std::size_t>(i)] & bit(p.at(e, i));
    if (ok) out.push_back(e);
  }
  return out;
}

std::vector<std::uint64_t> subset_signature(const Matching& p, std::span<const int> cand, std::span<const int> pick) {
  std::vector<std::uint64_t> sig(static_cast<std::size_t>(p.arity()), 0);
  for (int c : pick) {
    const int e = cand[static_cast<std::size_t>(c)];
    for (int i = 0; i < p.arity(); ++i) sig[static_cast<std::size_t>(i)] |= bit(p.at(e, i));
  }
  return sig;
}

}  // namespace

// -------------------------------------------------------------------- Predicate

std::string to_string(PredicateKind kind) {
  switch (kind) {
    case PredicateKind::intersecting: return "intersecting";
    case PredicateKind::weakly_intersecting: return "weakly-intersecting";
    case PredicateKind::set_intersecting: return "set-intersecting";
    case PredicateKind::weakly_set_intersecting: return "weakly-set-intersecting";
  }
  return "?";
}

Predicate Predicate::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  Predicate p;
  if (name == "intersecting" || name == "t-intersecting") p.kind = PredicateKind::intersecting;
  else if (name == "weakly-intersecting" || name == "weakly-t-intersecting") p.kind = PredicateKind::weakly_intersecting;
  else if (name == "set-intersecting" || name == "t-set-intersecting") p.kind = PredicateKind::set_intersecting;
  else if (name == "weakly-set-intersecting" || name == "weakly-t-set-intersecting")
    p.kind = PredicateKind::weakly_set_intersecting;
  else
    throw DomainError("unknown predicate kind '" + name + "'");
  if (colon != std::string::npos) {
    try {
      std::size_t pos = 0;
      p.t = std::stoi(text.substr(colon + 1), &pos);
      if (pos != text.size() - colon - 1) throw std::invalid_argument(text);
    } catch (const std::logic_error&) {
      throw DomainError("cannot parse t in predicate '" + text + "'");
    }
  }
  if (p.t < 1) throw DomainError("predicate t must be >= 1");
  return p;
}

std::string Predicate::str() const { return to_string(kind) + ":" + std::to_string(t); }

bool Predicate::holds(const Matching& p, const Matching& q) const {
  switch (kind) {
    case PredicateKind::intersecting: return intersects_t(p, q, t);
    case PredicateKind::weakly_intersecting: return weakly_intersects_t(p, q, t);
    case PredicateKind::set_intersecting:
      return p.size() >= t && q.size() >= t && set_intersects_t(p, q, t);
    case PredicateKind::weakly_set_intersecting:
      return p.size() >= t && q.size() >= t && weakly_set_intersects_t(p, q, t);
  }
  return false;
}

// ------------------------------------------------------------ pairwise predicates

bool intersects_t(const Matching& p, const Matching& q, int t) {
  check_pair(p, q, t);
  int common = 0;
  int a = 0, b = 0;
  // edges are sorted with distinct first coordinates
  while (a < p.size() && b < q.size()) {
    const Vertex x = p.at(a, 0), y = q.at(b, 0);
    if (x < y) ++a;
    else if (y < x) ++b;
    else {
      auto ea = p.edge(a), eb = q.edge(b);
      common += std::equal(ea.begin(), ea.end(), eb.begin());
      ++a;
      ++b;
    }
  }
  return common >= t;
}

bool weakly_intersects_t(const Matching& p, const Matching& q, int t) {
  check_pair(p, q, t);
  const int k = p.arity();
  if (k <= 2) return intersects_t(p, q, t);
  std::vector<int> pos(kMaxPartSize + 1);
  for (int i = 0; i < k; ++i) {
    std::fill(pos.begin(), pos.end(), -1);
    for (int f = 0; f < q.size(); ++f) pos[q.at(f, i)] = f;
    for (int j = i + 1; j < k; ++j) {
      int common = 0;
      for (int e = 0; e < p.size(); ++e) {
        const int f = pos[p.at(e, i)];
        common += f >= 0 && q.at(f, j) == p.at(e, j);
      }
      if (common < t) return false;
    }
  }
  return true;
}

bool set_intersects_t(const Matching& p, const Matching& q, int t) {
  check_pair(p, q, t);
  if (t > p.size() || t > q.size()) throw DomainError("t exceeds the number of edges");
  const int k = p.arity();
  std::vector<std::uint64_t> sp(static_cast<std::size_t>(k)), sq(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    sp[static_cast<std::size_t>(i)] = shadow_mask(p, i);
    sq[static_cast<std::size_t>(i)] = shadow_mask(q, i);
  }
  const std::vector<int> cp = box_candidates(p, sq);
  const std::vector<int> cq = box_candidates(q, sp);
  if (static_cast<int>(cp.size()) < t || static_cast<int>(cq.size()) < t) return false;

  // A box holds exactly t edges of P iff it equals the shadow box of some
  // t-subset of P (coordinates within a part are distinct), so it suffices to
  // match shadow signatures of t-subsets.
  std::vector<std::vector<std::uint64_t>> sigs;
  any_combination(static_cast<int>(cp.size()), t, [&](std::span<const int> pick) {
    sigs.push_back(subset_signature(p, cp, pick));
    return false;
  });
  std::sort(sigs.begin(), sigs.end());
  return any_combination(static_cast<int>(cq.size()), t, [&](std::span<const int> pick) {
    return std::binary_search(sigs.begin(), sigs.end(), subset_signature(q, cq, pick));
  });
}

bool weakly_set_intersects_t(const Matching& p, const Matching& q, int t) {
  check_pair(p, q, t);
  const int k = p.arity();
  if (k <= 2) return set_intersects_t(p, q, t);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!set_intersects_t(project_pair(p, i, j).pairs, project_pair(q, i, j).pairs, t)) return false;
  return true;
}

// -------------------------------------------------------------- family predicates

bool family_satisfies(std::span<const Matching> members, const Predicate& pred) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (!pred.holds(members[a], members[b])) return false;
  return true;
}

bool family_satisfies(const Family& f, const Predicate& pred) {
  const std::vector<Matching> m = f.members();
  return family_satisfies(m, pred);
}

bool cross_set_intersecting(const Family& g, const Family& h, int t) {
  if (g.universe().sizes() != h.universe().sizes())
    throw DomainError("cross set-intersection needs families of equal edge count");
  const std::vector<Matching> a = g.members(), b = h.members();
  for (const auto& p : a)
    for (const auto& q : b)
      if (p != q && !set_intersects_t(p, q, t)) return false;
  return true;
}

// ------------------------------------------------------------- star recognition

std::string to_string(StarKind kind) {
  switch (kind) {
    case StarKind::t_star: return "t-star";
    case StarKind::t_set_star: return "t-set-star";
    case StarKind::weak_t_star: return "weak-t-star";
    case StarKind::weak_t_set_star: return "weak-t-set-star";
    case StarKind::none: return "none";
  }
  return "?";
}

std::vector<Matching> project_family(std::span<const Matching> members, int i, int j) {
  std::vector<Matching> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(project_pair(m, i, j).pairs);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Matching> full_star_centres(const PartStructure& parts, std::span<const int> sizes,
                                        std::span<const Matching> members, int t) {
  if (members.empty() || t < 1) return {};
  // edges common to every member
  std::vector<Edge> common = members.front().edges();
  for (std::size_t m = 1; m < members.size() && static_cast<int>(common.size()) >= t; ++m)
    std::erase_if(common, [&](const Edge& e) { return !members[m].contains_edge(e); });
  if (static_cast<int>(common.size()) < t) return {};

  BigCount expected = 0;
  for (int r : sizes)
    if (r >= t) expected += t_star_size(parts.sizes(), r, t);
  if (BigCount(members.size()) != expected) return {};

  std::vector<Matching> centres;
  any_combination(static_cast<int>(common.size()), t, [&](std::span<const int> pick) {
    std::vector<std::vector<int>> edges;
    for (int c : pick) edges.emplace_back(common[static_cast<std::size_t>(c)].begin(), common[static_cast<std::size_t>(c)].end());
    centres.push_back(Matching::from_edges(parts.k(), edges));
    return false;
  });
  return centres;
}

std::vector<BoxCentre> full_set_star_centres(const PartStructure& parts, int r, std::span<const Matching> members,
                                             int t) {
  if (members.empty() || t < 1 || t > r) return {};
  if (BigCount(members.size()) != t_set_star_size(parts.sizes(), r, t)) return {};
  const Matching& first = members.front();
  std::vector<BoxCentre> out;
  any_combination(first.size(), t, [&](std::span<const int> pick) {
    std::vector<std::vector<int>> edges;
    for (int e : pick) edges.emplace_back(first.edge(e).begin(), first.edge(e).end());
    BoxCentre box = BoxCentre::spanned_by(Matching::from_edges(parts.k(), edges));
    const bool all = std::all_of(members.begin(), members.end(),
                                 [&](const Matching& m) { return box.edges_inside(m) == t; });
    if (all) out.push_back(std::move(box));
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

StarClassification classify_star(const Family& f, int t) {
  StarClassification c;
  const Universe& u = f.universe();
  const PartStructure& parts = u.parts();
  const std::vector<Matching> members = f.members();
  if (members.empty()) return c;

  c.star_centres = full_star_centres(parts, u.sizes(), members, t);
  c.t_star = !c.star_centres.empty();
  if (u.uniform()) {
    c.set_star_centres = full_set_star_centres(parts, u.r(), members, t);
    c.t_set_star = !c.set_star_centres.empty();
  }

  if (parts.k() <= 2) {
    c.weak_t_star = c.t_star;
    c.weak_t_set_star = c.t_set_star;
  } else {
    c.weak_t_star = true;
    c.weak_t_set_star = u.uniform();
    for (int i = 0; i < parts.k() && (c.weak_t_star || c.weak_t_set_star); ++i)
      for (int j = i + 1; j < parts.k(); ++j) {
        const std::vector<Matching> proj = project_family(members, i, j);
        const PartStructure pair_parts{parts.size(i), parts.size(j)};
        if (c.weak_t_star && full_star_centres(pair_parts, u.sizes(), proj, t).empty()) c.weak_t_star = false;
        if (c.weak_t_set_star && full_set_star_centres(pair_parts, u.r(), proj, t).empty()) c.weak_t_set_star = false;
      }
  }

  if (u.uniform()) {
    const int r = u.r();
    c.degenerate_centre = c.t_star && r == t + 1 && parts.all_equal(t + 1);
    c.ambiguous_box = c.t_set_star && r == 2 * t && parts.all_equal(2 * t);
  }

  if (c.t_star) c.kind = StarKind::t_star;
  else if (c.t_set_star) c.kind = StarKind::t_set_star;
  else if (c.weak_t_star) c.kind = StarKind::weak_t_star;
  else if (c.weak_t_set_star) c.kind = StarKind::weak_t_set_star;
  return c;
}

}  // namespace kmatch
