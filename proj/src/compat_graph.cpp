#include <atomic>

#include "detail/parallel.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/search.hpp"

namespace kmatch {

CompatGraph CompatGraph::build(const UniversePtr& u, const Predicate& pred, std::uint64_t cap, unsigned workers) {
  const std::size_t n = u->size();
  if (n > cap) {
    const BigCount bytes = BigCount(n) * BigCount((n + 63) / 64 * 8);
    throw UniverseTooLarge("compatibility graph on " + std::to_string(n) + " vertices exceeds cap " +
                               std::to_string(cap) + " (would need " + bytes.str() + " bytes of rows)",
                           std::to_string(n));
  }
  CompatGraph g;
  g.universe_ = u;
  g.pred_ = pred;
  g.rows_.assign(n, Bitset(n));

  // Each worker fills the upper triangle of whole rows, so no two workers
  // write the same row; the lower triangle is mirrored afterwards.
  std::atomic<std::size_t> next{0};
  detail::run_workers(workers, [&](unsigned) {
    for (std::size_t a = next.fetch_add(1); a < n; a = next.fetch_add(1)) {
      const Matching& p = (*u)[a];
      Bitset& row = g.rows_[a];
      row.set(a);
      for (std::size_t b = a + 1; b < n; ++b)
        if (pred.holds(p, (*u)[b])) row.set(b);
    }
  });

  for (std::size_t a = 0; a < n; ++a)
    g.rows_[a].for_each([&](std::size_t b) {
      if (b > a) g.rows_[b].set(a);
    });
  return g;
}

CompatGraph CompatGraph::from_rows(std::vector<Bitset> rows) {
  CompatGraph g;
  const std::size_t n = rows.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v].size() != n) throw DomainError("adjacency rows must be square");
    rows[v].set(v);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rows[a].test(b) != rows[b].test(a)) throw DomainError("adjacency rows must be symmetric");
  g.rows_ = std::move(rows);
  return g;
}

Family family_of(const UniversePtr& u, const std::vector<std::size_t>& vertices) {
  Family f(u);
  for (std::size_t v : vertices) f.insert(v);
  return f;
}

}  // namespace kmatch
