#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "kmatch/matchings.hpp"

namespace kmatch {

/// Box C_1 x ... x C_k of per-part t-sets (vertices ascending).
struct BoxCentre {
  std::vector<std::vector<Vertex>> sets;

  static BoxCentre from_sets(const std::vector<std::vector<int>>& sets);
  /// Box spanned by the shadows of the given matching's edges.
  static BoxCentre spanned_by(const Matching& edges);

  int t() const { return sets.empty() ? 0 : static_cast<int>(sets.front().size()); }
  int arity() const { return static_cast<int>(sets.size()); }
  std::uint64_t mask(int part) const;
  /// Throws DomainError unless every C_i is a t-subset of [n_i].
  void validate(const PartStructure& parts) const;
  /// Number of edges of P lying inside the box.
  int edges_inside(const Matching& p) const;
  /// Complementary box (N_1 - C_1) x ... x (N_k - C_k).
  BoxCentre complement(const PartStructure& parts) const;
  std::string str() const;

  friend bool operator==(const BoxCentre&, const BoxCentre&) = default;
  friend auto operator<=>(const BoxCentre&, const BoxCentre&) = default;
};

/// Either t pairwise-disjoint edges or a box.
using Centre = std::variant<Matching, BoxCentre>;

}  // namespace kmatch
