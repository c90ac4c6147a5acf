#include <map>

#include "kmatch/errors.hpp"
#include "kmatch/harness.hpp"

namespace kmatch::harness {
namespace {

Cell cell(PartStructure parts, std::vector<int> sizes, const std::string& pred,
          std::optional<std::string> exception = std::nullopt) {
  Cell c;
  c.parts = std::move(parts);
  c.sizes = std::move(sizes);
  c.pred = Predicate::parse(pred);
  c.exception = std::move(exception);
  return c;
}

Campaign make(std::string name, CampaignKind kind, Expectation mode, std::vector<Cell> cells) {
  Campaign c;
  c.name = std::move(name);
  c.kind = kind;
  c.mode = mode;
  c.cells = std::move(cells);
  return c;
}

std::vector<Cell> with_predicate(std::vector<Cell> cells, PredicateKind kind) {
  for (auto& c : cells) c.pred.kind = kind;
  return cells;
}

std::vector<Cell> intersecting_grid() {
  return {cell({3, 3}, {2}, "intersecting:1"),    cell({3, 4}, {2}, "intersecting:1"),
          cell({4, 4}, {2}, "intersecting:1"),    cell({3, 3, 3}, {2}, "intersecting:1"),
          cell({2, 3, 4}, {2}, "intersecting:1"), cell({4, 4}, {3}, "intersecting:1"),
          cell({3, 3, 3}, {3}, "intersecting:1"), cell({3, 4, 4}, {3}, "intersecting:1")};
}

std::vector<Cell> permutation_grid() {
  return {cell({3, 3}, {3}, "intersecting:1"), cell({4, 4}, {4}, "intersecting:1"),
          cell({5, 5}, {5}, "intersecting:1"), cell({3, 3, 3}, {3}, "intersecting:1")};
}

std::vector<Cell> t_intersecting_grid() {
  return {cell({4, 4}, {3}, "intersecting:2"), cell({4, 4}, {4}, "intersecting:2"),
          cell({5, 5}, {4}, "intersecting:2"), cell({5, 5}, {5}, "intersecting:2"),
          cell({3, 3, 3}, {3}, "intersecting:2"), cell({5, 5}, {5}, "intersecting:3")};
}

const char* kSmallSetException = "t = 2 with r and every part equal to 4";

std::vector<Cell> t_set_grid() {
  return {cell({4, 4}, {4}, "set-intersecting:2", kSmallSetException), cell({5, 5}, {5}, "set-intersecting:2"),
          cell({5, 5}, {4}, "set-intersecting:2"), cell({3, 3}, {3}, "set-intersecting:1"),
          cell({4, 4, 4}, {4}, "set-intersecting:2")};
}

std::vector<Cell> nonuniform_grid() {
  return {cell({3, 3}, {1, 2}, "intersecting:1"), cell({3, 3, 3}, {1, 2}, "intersecting:1"),
          cell({4, 4}, {1, 2}, "intersecting:1"), cell({3, 3}, {1, 2, 3}, "intersecting:1"),
          cell({3, 4}, {2, 3}, "intersecting:1")};
}

using Factory = Campaign (*)();

const std::map<std::string, Factory>& registry() {
  static const std::map<std::string, Factory> r = {
      {"intersecting-bound",
       [] { return make("intersecting-bound", CampaignKind::bound, Expectation::assert_uniqueness, intersecting_grid()); }},
      {"permutation-intersecting",
       [] {
         return make("permutation-intersecting", CampaignKind::bound, Expectation::assert_equality, permutation_grid());
       }},
      {"t-intersecting-bound",
       [] { return make("t-intersecting-bound", CampaignKind::bound, Expectation::record_only, t_intersecting_grid()); }},
      {"t-set-bound", [] { return make("t-set-bound", CampaignKind::bound, Expectation::record_only, t_set_grid()); }},
      {"nonuniform-bound",
       [] { return make("nonuniform-bound", CampaignKind::bound, Expectation::assert_uniqueness, nonuniform_grid()); }},
      {"weak-intersecting-bound",
       [] {
         return make("weak-intersecting-bound", CampaignKind::bound, Expectation::assert_uniqueness,
                     with_predicate(intersecting_grid(), PredicateKind::weakly_intersecting));
       }},
      {"weak-t-intersecting-bound",
       [] {
         return make("weak-t-intersecting-bound", CampaignKind::bound, Expectation::record_only,
                     with_predicate(t_intersecting_grid(), PredicateKind::weakly_intersecting));
       }},
      {"weak-t-set-bound",
       [] {
         return make("weak-t-set-bound", CampaignKind::bound, Expectation::record_only,
                     with_predicate(t_set_grid(), PredicateKind::weakly_set_intersecting));
       }},
      {"weak-nonuniform-bound",
       [] {
         return make("weak-nonuniform-bound", CampaignKind::bound, Expectation::assert_uniqueness,
                     with_predicate(nonuniform_grid(), PredicateKind::weakly_intersecting));
       }},
      {"katona",
       [] {
         std::vector<Cell> cells;
         for (int n = 4; n <= 6; ++n)
           for (int t = 1; t <= 2; ++t) {
             std::vector<int> sizes;
             for (int s = 1; s <= n; ++s) sizes.push_back(s);
             cells.push_back(cell({n}, sizes, "intersecting:" + std::to_string(t)));
           }
         Campaign c = make("katona", CampaignKind::katona, Expectation::assert_equality, std::move(cells));
         c.all_maxima = false;
         return c;
       }},
      {"ak-regime",
       [] {
         std::vector<Cell> cells;
         for (int n = 5; n <= 9; ++n) cells.push_back(cell({n}, {3}, "intersecting:2"));
         Campaign c = make("ak-regime", CampaignKind::scan_ak_regime, Expectation::record_only, std::move(cells));
         c.all_maxima = false;
         return c;
       }},
      {"examples", [] { return make("examples", CampaignKind::examples, Expectation::assert_equality, {}); }},
      {"formulas", [] { return make("formulas", CampaignKind::formulas, Expectation::assert_equality, {}); }},
      {"projection-properties",
       [] { return make("projection-properties", CampaignKind::lemma1, Expectation::assert_equality, {}); }},
      {"weak-star",
       [] {
         return make("weak-star", CampaignKind::weak_star, Expectation::assert_equality,
                     {cell({3, 3, 3}, {2}, "intersecting:1"), cell({4, 4, 4}, {2}, "intersecting:1"),
                      cell({3, 3, 3}, {3}, "intersecting:1"), cell({3, 4, 5}, {2}, "intersecting:1"),
                      cell({3, 3, 3, 3}, {2}, "intersecting:1"), cell({2, 2, 2}, {2}, "intersecting:1"),
                      cell({3, 3, 3}, {2}, "intersecting:2")});
       }},
      {"conj-hi",
       [] {
         return make("conj-hi", CampaignKind::scan_hi, Expectation::record_only,
                     {cell({3, 3}, {2}, "intersecting:1"), cell({4, 4}, {3}, "intersecting:1"),
                      cell({4, 4}, {4}, "intersecting:2"), cell({3, 3, 3}, {2}, "intersecting:1"),
                      cell({5}, {3}, "intersecting:2"), cell({6}, {4}, "intersecting:2")});
       }},
      {"conj2",
       [] {
         return make("conj2", CampaignKind::scan_conj2, Expectation::record_only,
                     {cell({3, 4}, {3}, "intersecting:1"), cell({3, 5}, {3}, "intersecting:1"),
                      cell({4, 4}, {4}, "intersecting:2"), cell({4, 5}, {4}, "intersecting:2"),
                      cell({4, 6}, {4}, "intersecting:2"), cell({5, 5}, {5}, "intersecting:3")});
       }},
      {"conj-tset",
       [] {
         return make("conj-tset", CampaignKind::scan_tset, Expectation::record_only,
                     {cell({4, 4}, {4}, "weakly-set-intersecting:2", kSmallSetException),
                      cell({4, 4, 4}, {4}, "weakly-set-intersecting:2", kSmallSetException),
                      cell({4, 4, 4}, {4}, "set-intersecting:2"), cell({3, 3, 3}, {3}, "weakly-set-intersecting:1"),
                      cell({5, 5}, {5}, "weakly-set-intersecting:2")});
       }},
      {"conj-nonuniform",
       [] {
         return make("conj-nonuniform", CampaignKind::scan_nonuniform, Expectation::record_only,
                     {cell({3, 3}, {2, 3}, "intersecting:2"), cell({4, 4}, {2, 3}, "intersecting:2"),
                      cell({4, 4}, {2, 3, 4}, "intersecting:2"), cell({3, 3, 3}, {2, 3}, "weakly-intersecting:2")});
       }},
  };
  return r;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {{"lemma1", "projection-properties"}};
  return a;
}

}  // namespace

Campaign builtin_campaign(const std::string& name) {
  std::string key = name;
  if (auto a = aliases().find(key); a != aliases().end()) key = a->second;
  auto it = registry().find(key);
  if (it == registry().end()) throw DomainError("unknown built-in campaign '" + name + "'");
  return it->second();
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

}  // namespace kmatch::harness
