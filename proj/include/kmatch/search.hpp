#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmatch/bitset.hpp"
#include "kmatch/matchings.hpp"
#include "kmatch/predicates.hpp"

namespace kmatch {

inline constexpr std::uint64_t kDefaultGraphCap = 50'000;          // vertices
inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;  // branch-and-bound nodes
inline constexpr std::uint64_t kDefaultMaximaCap = 100'000;

/// Adjacency bit-rows over a universe under a predicate. Rows are symmetric
/// and every diagonal bit is set.
class CompatGraph {
 public:
  /// Throws UniverseTooLarge (carrying the predicted row memory) when the
  /// universe exceeds `cap` vertices.
  static CompatGraph build(const UniversePtr& u, const Predicate& pred, std::uint64_t cap = kDefaultGraphCap,
                           unsigned workers = 1);
  /// Plain graph from symmetric rows; diagonal bits are forced on.
  static CompatGraph from_rows(std::vector<Bitset> rows);

  std::size_t order() const noexcept { return rows_.size(); }
  const Bitset& row(std::size_t v) const { return rows_[v]; }
  bool adjacent(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  /// Neighbours excluding v itself.
  std::size_t degree(std::size_t v) const { return rows_[v].count() - 1; }

  const UniversePtr& universe() const noexcept { return universe_; }
  const std::optional<Predicate>& predicate() const noexcept { return pred_; }

  friend bool operator==(const CompatGraph& a, const CompatGraph& b) { return a.rows_ == b.rows_; }

 private:
  UniversePtr universe_;
  std::optional<Predicate> pred_;
  std::vector<Bitset> rows_;
};

struct CliqueOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned workers = 1;
  /// A clique of this size is known to exist; only larger ones are searched
  /// for in the bounding phase.
  std::size_t known_lower_bound = 0;
};

struct CliqueResult {
  std::size_t size = 0;
  /// Lexicographically smallest maximum clique (ascending vertex indices).
  std::vector<std::size_t> witness;
  std::uint64_t nodes = 0;
};

/// Exact maximum clique: bitset branch and bound with greedy colouring bounds
/// over a degeneracy order, followed by a canonical witness search. Throws
/// BudgetExceeded when the node budget runs out.
CliqueResult max_clique(const CompatGraph& g, const CliqueOptions& opt = {});

/// Every clique of exactly `size` vertices, in lexicographic order. Throws
/// MaximaOverflow when more than `cap` exist.
std::vector<std::vector<std::size_t>> all_max_cliques(const CompatGraph& g, std::size_t size,
                                                      std::uint64_t cap = kDefaultMaximaCap,
                                                      const CliqueOptions& opt = {});

/// Family of the universe vertices listed.
Family family_of(const UniversePtr& u, const std::vector<std::size_t>& vertices);

enum class BoundStatus { matches, exceeds, below };
std::string to_string(BoundStatus s);

struct ExtremalOptions {
  std::uint64_t universe_cap = kDefaultUniverseCap;
  std::uint64_t graph_cap = kDefaultGraphCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t maxima_cap = kDefaultMaximaCap;
  unsigned workers = 1;
  bool all_maxima = false;
  /// Start the bound at the star formula value (a star is always feasible).
  bool seed_with_star = false;
};

struct MaximumSummary {
  std::vector<std::size_t> members;
  StarClassification classification;
};

struct ExtremalReport {
  PartStructure parts;
  std::vector<int> sizes;
  Predicate pred;
  std::size_t universe_size = 0;
  BigCount max_size;
  Family witness;
  StarClassification witness_classification;
  BigCount formula_value;
  BoundStatus status = BoundStatus::matches;
  std::uint64_t nodes = 0;
  bool maxima_enumerated = false;
  bool maxima_overflow = false;
  std::uint64_t maxima_count = 0;  // partial count on overflow
  std::vector<MaximumSummary> maxima;
  std::map<std::string, std::uint64_t> tally;  // classification label -> count

  bool all_maxima_are(StarKind kind) const;
};

/// The predicate-appropriate star size summed over levels: t-stars for the
/// intersecting kinds, t-set-stars for the set kinds.
BigCount star_formula(const PartStructure& parts, const std::vector<int>& sizes, const Predicate& pred);

/// enumerate -> build graph -> maximum clique -> (all maxima) -> classify.
/// Throws InternalError if the maximum falls below the star formula.
ExtremalReport extremal(const PartStructure& parts, std::vector<int> sizes, const Predicate& pred,
                        const ExtremalOptions& opt = {});

}  // namespace kmatch
