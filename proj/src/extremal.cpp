#include <algorithm>

#include "kmatch/combinat.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/search.hpp"

namespace kmatch {

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::matches: return "MATCHES_STAR_BOUND";
    case BoundStatus::exceeds: return "EXCEEDS_STAR_BOUND";
    case BoundStatus::below: return "BELOW_STAR_BOUND";
  }
  return "?";
}

bool ExtremalReport::all_maxima_are(StarKind kind) const {
  if (!maxima_enumerated || maxima_overflow || maxima.empty()) return false;
  return std::all_of(maxima.begin(), maxima.end(), [&](const MaximumSummary& m) {
    const StarClassification& c = m.classification;
    switch (kind) {
      case StarKind::t_star: return c.t_star;
      case StarKind::t_set_star: return c.t_set_star;
      case StarKind::weak_t_star: return c.weak_t_star;
      case StarKind::weak_t_set_star: return c.weak_t_set_star;
      case StarKind::none: return c.kind == StarKind::none;
    }
    return false;
  });
}

BigCount star_formula(const PartStructure& parts, const std::vector<int>& sizes, const Predicate& pred) {
  BigCount total;
  for (int r : sizes) {
    if (r < pred.t) continue;
    total += pred.set_kind() ? t_set_star_size(parts.sizes(), r, pred.t) : t_star_size(parts.sizes(), r, pred.t);
  }
  return total;
}

ExtremalReport extremal(const PartStructure& parts, std::vector<int> sizes, const Predicate& pred,
                        const ExtremalOptions& opt) {
  if (pred.t < 0) throw DomainError("t must be non-negative");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  ExtremalReport rep;
  rep.parts = parts;
  rep.sizes = sizes;
  rep.pred = pred;
  rep.formula_value = star_formula(parts, sizes, pred);

  UniversePtr u = sizes.size() == 1 ? Universe::enumerate(parts, sizes.front(), opt.universe_cap)
                                    : Universe::enumerate_levels(parts, sizes, opt.universe_cap);
  rep.universe_size = u->size();
  const CompatGraph g = CompatGraph::build(u, pred, opt.graph_cap, opt.workers);

  CliqueOptions co;
  co.node_budget = opt.node_budget;
  co.workers = opt.workers;
  if (opt.seed_with_star && rep.formula_value.fits_u64()) co.known_lower_bound = rep.formula_value.to_u64();
  const CliqueResult cr = max_clique(g, co);
  rep.nodes = cr.nodes;
  rep.max_size = BigCount(cr.size);
  rep.witness = family_of(u, cr.witness);
  if (!family_satisfies(rep.witness, pred)) throw InternalError("clique witness violates " + pred.str());
  rep.witness_classification = classify_star(rep.witness, pred.t);

  if (rep.max_size < rep.formula_value) {
    rep.status = BoundStatus::below;
    throw InternalError("maximum " + rep.max_size.str() + " below the feasible star size " + rep.formula_value.str() +
                        " for " + pred.str() + " on " + parts.str());
  }
  rep.status = rep.max_size == rep.formula_value ? BoundStatus::matches : BoundStatus::exceeds;

  if (opt.all_maxima) {
    rep.maxima_enumerated = true;
    try {
      const auto cliques = all_max_cliques(g, cr.size, opt.maxima_cap, co);
      rep.maxima_count = cliques.size();
      for (const auto& c : cliques) {
        MaximumSummary s{c, classify_star(family_of(u, c), pred.t)};
        ++rep.tally[to_string(s.classification.kind)];
        rep.maxima.push_back(std::move(s));
      }
    } catch (const MaximaOverflow& e) {
      rep.maxima_overflow = true;
      rep.maxima_count = e.partial_count();
    }
  }
  return rep;
}

}  // namespace kmatch
