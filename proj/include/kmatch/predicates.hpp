#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmatch/centre.hpp"
#include "kmatch/matchings.hpp"

namespace kmatch {

enum class PredicateKind { intersecting, weakly_intersecting, set_intersecting, weakly_set_intersecting };

struct Predicate {
  PredicateKind kind = PredicateKind::intersecting;
  int t = 1;

  /// "kind:t", e.g. "weakly-set-intersecting:2". A bare kind means t = 1.
  static Predicate parse(const std::string& text);
  std::string str() const;

  bool set_kind() const {
    return kind == PredicateKind::set_intersecting || kind == PredicateKind::weakly_set_intersecting;
  }
  bool weak_kind() const {
    return kind == PredicateKind::weakly_intersecting || kind == PredicateKind::weakly_set_intersecting;
  }
  /// The weakly set-intersecting notion is defined here projection-wise; the
  /// flag travels into reports.
  bool inferred_definition() const { return kind == PredicateKind::weakly_set_intersecting; }

  /// Pairwise test on distinct matchings. Pairs where a matching has fewer
  /// than t edges never satisfy a set predicate.
  bool holds(const Matching& p, const Matching& q) const;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

std::string to_string(PredicateKind kind);

/// |P cap Q| >= t as edge sets.
bool intersects_t(const Matching& p, const Matching& q, int t);
/// |P_j^i cap Q_j^i| >= t for all distinct parts; same as intersects_t for k <= 2.
bool weakly_intersects_t(const Matching& p, const Matching& q, int t);
/// Some box of per-part t-sets holds exactly t edges of each matching.
/// Throws DomainError when t exceeds either matching's size.
bool set_intersects_t(const Matching& p, const Matching& q, int t);
/// Every pair projection t-set-intersects; same as set_intersects_t for k <= 2.
bool weakly_set_intersects_t(const Matching& p, const Matching& q, int t);

bool family_satisfies(const Family& f, const Predicate& pred);
bool family_satisfies(std::span<const Matching> members, const Predicate& pred);

/// Every P in G and Q in H t-set-intersect. Throws on mismatched edge counts.
bool cross_set_intersecting(const Family& g, const Family& h, int t);

enum class StarKind { t_star, t_set_star, weak_t_star, weak_t_set_star, none };
std::string to_string(StarKind kind);

struct StarClassification {
  StarKind kind = StarKind::none;  // strongest applicable label
  bool t_star = false;
  bool t_set_star = false;
  bool weak_t_star = false;
  bool weak_t_set_star = false;
  std::vector<Matching> star_centres;      // every valid t-edge centre
  std::vector<BoxCentre> set_star_centres;  // every valid box centre
  /// r = t+1 with all parts of size t+1: the star is one matching and its
  /// centre is not unique.
  bool degenerate_centre = false;
  /// r = 2t with all parts of size 2t: the complementary box is also a centre.
  bool ambiguous_box = false;
};

/// Recognises F as exactly a full t-star / t-set-star of its universe, or
/// (for k >= 3) as a family whose pair projections are all full stars.
StarClassification classify_star(const Family& f, int t);

/// `members` (distinct, any order) is exactly the t-star of P_{sizes, parts}
/// with some centre; returns every such centre (empty when not a star).
std::vector<Matching> full_star_centres(const PartStructure& parts, std::span<const int> sizes,
                                        std::span<const Matching> members, int t);
/// `members` is exactly the t-set-star of P_{r, parts} for some box.
std::vector<BoxCentre> full_set_star_centres(const PartStructure& parts, int r, std::span<const Matching> members,
                                             int t);

/// Distinct pair projections {P_j^i : P in members}.
std::vector<Matching> project_family(std::span<const Matching> members, int i, int j);

}  // namespace kmatch
