#pragma once

// Named extremal families, each realised as a Family over an enumerated
// universe. Permutations of [n] are encoded as perfect matchings
// {(x, sigma(x))} of K_{n,n}.

#include <optional>
#include <vector>

#include "kmatch/centre.hpp"
#include "kmatch/matchings.hpp"

namespace kmatch {

/// All matchings containing every centre edge. On a multi-level universe this
/// is the union of the per-level stars.
Family t_star(const UniversePtr& u, const Matching& centre);

/// All matchings with exactly t edges inside the box (t = side length).
Family t_set_star(const UniversePtr& u, const BoxCentre& box);

/// Centre inside the pair projection (distinguished part, part j): either t
/// pairs (x_d, y_j) or a box A x B with A in the distinguished part.
struct PairCentre {
  int part = 0;                       // the other part j
  std::optional<Matching> pairs;      // arity 2, first coordinate in the distinguished part
  std::optional<BoxCentre> box;       // arity 2, first side in the distinguished part
};

/// Maximal family whose projections onto (distinguished, j) contain the given
/// pairs (or meet the given box in exactly t edges) for every listed j.
/// `distinguished` defaults to the last part.
Family semi_star(const UniversePtr& u, const std::vector<PairCentre>& centres, bool set_variant,
                 std::optional<int> distinguished = std::nullopt);

/// Number of distinguished-part vertices covered by the centres.
int semi_star_cover(const std::vector<PairCentre>& centres, bool set_variant);

/// {F in C([n], r) : |F cap [t+2i]| >= t+i} over the k = 1 universe.
Family ak_family(int n, int r, int t, int i, std::uint64_t cap = kDefaultUniverseCap);

/// Permutations of [n] with at least t+i fixed points in [t+2i].
Family gi_family(int n, int t, int i, std::uint64_t cap = kDefaultUniverseCap);

/// Diagonal perfect matching {(x, ..., x) : x in [min part]}.
Matching diagonal_base(const PartStructure& parts);

/// {P : |P cap H_{t+2i}| >= t+i}, H_l = the first l edges of `base` in the
/// given order (diagonal when omitted).
Family hi_family(const UniversePtr& u, int t, int i, const std::optional<std::vector<Edge>>& base = std::nullopt);

/// Subsets of [n] as the k = 1 universe with levels 0..n (level 0 optional).
UniversePtr power_set_universe(int n, bool include_empty = true);

/// A_l = {A : |A| >= l}, or A_{l,x} = {A : |A - {x}| >= l} when x is given.
Family katona_family(int n, int l, std::optional<int> x = std::nullopt, bool include_empty = true);

/// {(x, s_2(x), ..., s_k(x)) : s_j in S}, S = {id, (12)(34), (13)(24), (14)(23)}.
Family klein_family(int k, std::uint64_t cap = kDefaultUniverseCap);

/// The Klein four-group on [4] as permutations (0-based images).
std::vector<std::vector<int>> klein_group();

/// Union of the t-stars with the given centre over the levels in `sizes`.
Family non_uniform_star(const PartStructure& parts, const std::vector<int>& sizes, const Matching& centre,
                        std::uint64_t cap = kDefaultUniverseCap);

}  // namespace kmatch
