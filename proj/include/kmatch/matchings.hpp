#pragma once

// Matchings of complete k-partite k-graphs, their enumeration into universes,
// and the projection/restriction operators used to reason about families.
//
// Conventions: vertices are 1-based within each part; part indices in this
// API are 0-based; a matching's edges are kept in strictly increasing
// lexicographic order.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmatch/bitset.hpp"
#include "kmatch/combinat.hpp"

namespace kmatch {

using Vertex = std::uint16_t;
using Edge = std::vector<Vertex>;

/// Largest supported part size (shadows are stored as 64-bit masks).
inline constexpr int kMaxPartSize = 64;
inline constexpr std::uint64_t kDefaultUniverseCap = 1'000'000;

class PartStructure {
 public:
  PartStructure() = default;
  explicit PartStructure(std::vector<int> sizes);
  PartStructure(std::initializer_list<int> sizes) : PartStructure(std::vector<int>(sizes)) {}

  /// "3,3,3" -> (3,3,3)
  static PartStructure parse(const std::string& text);

  int k() const noexcept { return static_cast<int>(sizes_.size()); }
  int size(int part) const { return sizes_.at(static_cast<std::size_t>(part)); }
  int min() const;
  std::span<const int> sizes() const noexcept { return sizes_; }
  bool all_equal(int n) const;
  /// Same structure with one part removed.
  PartStructure without(int part) const;
  std::string str() const;

  friend bool operator==(const PartStructure&, const PartStructure&) = default;

 private:
  std::vector<int> sizes_;
};

class Matching {
 public:
  Matching() = default;

  /// Validates coordinate-disjointness and canonicalises edge order.
  static Matching from_edges(int k, const std::vector<std::vector<int>>& edges);
  /// Arity taken from the first edge; at least one edge required.
  Matching(std::initializer_list<std::initializer_list<int>> edges);
  /// Trusted constructor: coords already canonical and disjoint.
  static Matching from_canonical(int k, std::vector<Vertex> coords);

  int arity() const noexcept { return k_; }
  int size() const noexcept { return k_ ? static_cast<int>(coords_.size()) / k_ : 0; }
  std::span<const Vertex> edge(int e) const {
    return {coords_.data() + static_cast<std::size_t>(e) * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  Vertex at(int e, int part) const { return coords_[static_cast<std::size_t>(e * k_ + part)]; }
  const std::vector<Vertex>& coords() const noexcept { return coords_; }

  bool contains_edge(std::span<const Vertex> e) const;
  /// Every edge fits inside the part structure.
  bool fits(const PartStructure& parts) const;
  std::vector<Edge> edges() const;
  std::string str() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  /// Orders by edge count, then lexicographically by edge list.
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b);

 private:
  Matching(int k, std::vector<Vertex> coords) : k_(k), coords_(std::move(coords)) {}

  int k_ = 0;
  std::vector<Vertex> coords_;
};

struct MatchingHash {
  std::size_t operator()(const Matching& m) const noexcept;
};

/// Matchings of one or more edge counts ("levels") over a fixed part
/// structure, in deterministic order: by level, then lexicographic.
class Universe {
 public:
  static std::shared_ptr<const Universe> enumerate(const PartStructure& parts, int r,
                                                   std::uint64_t cap = kDefaultUniverseCap);
  /// Disjoint union of several levels; sizes are deduplicated and sorted.
  /// Level 0 (the empty matching) is allowed here.
  static std::shared_ptr<const Universe> enumerate_levels(const PartStructure& parts, std::vector<int> sizes,
                                                          std::uint64_t cap = kDefaultUniverseCap);
  /// Predicted item count without enumerating.
  static BigCount predicted_size(const PartStructure& parts, std::span<const int> sizes);

  const PartStructure& parts() const noexcept { return parts_; }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  bool uniform() const noexcept { return sizes_.size() == 1; }
  /// Edge count of a uniform universe; throws DomainError otherwise.
  int r() const;

  std::size_t size() const noexcept { return items_.size(); }
  const Matching& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Matching>& items() const noexcept { return items_; }
  std::optional<std::size_t> index_of(const Matching& m) const;
  /// [begin, end) item range of the level with the given edge count.
  std::pair<std::size_t, std::size_t> level_range(int r) const;

 private:
  Universe() = default;

  PartStructure parts_;
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;  // offsets_[l] = first index of level sizes_[l]
  std::vector<Matching> items_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// A set of matchings from one universe, stored as a membership bitset.
class Family {
 public:
  Family() = default;
  explicit Family(UniversePtr u);
  Family(UniversePtr u, Bitset members);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  const Bitset& bits() const noexcept { return bits_; }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t index) const { return bits_.test(index); }
  bool contains(const Matching& m) const;
  void insert(std::size_t index) { bits_.set(index); }
  /// Throws DomainError when m is not in the universe.
  void insert(const Matching& m);
  std::vector<std::size_t> indices() const { return bits_.indices(); }
  std::vector<Matching> members() const;

  /// Throws DomainError unless both families share the same universe object.
  void require_same_universe(const Family& other) const;

  /// Free-form construction annotations (degenerate centres etc.).
  std::vector<std::string> notes;

  friend bool operator==(const Family& a, const Family& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

 private:
  UniversePtr universe_;
  Bitset bits_;
};

struct PairProjection {
  Matching pairs;  // arity 2: (x_i, x_j)
  int i = 0;
  int j = 0;
  friend bool operator==(const PairProjection&, const PairProjection&) = default;
  friend auto operator<=>(const PairProjection& a, const PairProjection& b) { return a.pairs <=> b.pairs; }
};

/// {(x_i, x_j) : x in P}
PairProjection project_pair(const Matching& p, int i, int j);
/// (P_j^i)_{j != i}, in increasing j.
std::vector<Matching> project_all(const Matching& p, int i);
/// Removes coordinate j from every edge.
Matching drop_part(const Matching& p, int j);
/// Vertices of part i covered by P, ascending.
std::vector<Vertex> vertex_shadow(const Matching& p, int i);
std::uint64_t shadow_mask(const Matching& p, int i);

/// The reduction key used by restrict_family: the matching with part j
/// removed. It determines the remaining projections from part i and carries
/// V_i, including for k = 2.
inline Matching reduce(const Matching& p, int /*i*/, int j) { return drop_part(p, j); }

/// Pair projections P_j^i of the members P of F with reduce(P, i, j) == X.
std::vector<PairProjection> restrict_family(const Family& f, int i, int j, const Matching& x);

/// All reductions X of members of F, each with its restricted projections,
/// ordered by X.
std::vector<std::pair<Matching, std::vector<PairProjection>>> partition_by_reduction(const Family& f, int i, int j);

}  // namespace kmatch
