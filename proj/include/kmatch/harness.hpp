#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmatch/search.hpp"
#include "kmatch/serialize.hpp"

namespace kmatch::harness {

enum class Expectation { assert_equality, assert_uniqueness, record_only };
std::string to_string(Expectation e);
Expectation parse_expectation(const std::string& s);

enum class Verdict { pass, fail, recorded, attention, skipped, error };
std::string to_string(Verdict v);

struct Row {
  std::string label;
  std::vector<std::pair<std::string, std::string>> fields;
  Verdict verdict = Verdict::recorded;
  std::string note;
  json detail = json::object();  // nested data (witnesses, maxima); JSON report only
  double seconds = 0;

  Row& set(const std::string& key, std::string value);
  Row& set(const std::string& key, const char* value) { return set(key, std::string(value)); }
  Row& set(const std::string& key, const BigCount& value) { return set(key, value.str()); }
  Row& set(const std::string& key, bool value) { return set(key, std::string(value ? "true" : "false")); }
  template <std::integral T>
  Row& set(const std::string& key, T value) {
    return set(key, std::to_string(value));
  }
  std::string get(const std::string& key) const;
};

struct CampaignReport {
  std::string name;
  Expectation mode = Expectation::record_only;
  json meta = json::object();
  std::vector<Row> rows;

  std::size_t count(Verdict v) const;
  /// No failed and no errored row.
  bool ok() const { return count(Verdict::fail) == 0 && count(Verdict::error) == 0; }
  std::string summary() const;
  /// Rows whose label starts with `prefix`.
  std::vector<const Row*> find(const std::string& prefix) const;
};

/// Runtime columns are only written when `timings` is set, so that reports
/// stay byte-identical across reruns by default.
void write_csv(std::ostream& os, const CampaignReport& r, bool timings = false);
json to_json(const CampaignReport& r, bool timings = false);

enum class CampaignKind {
  bound,
  katona,
  lemma1,
  weak_star,
  examples,
  formulas,
  scan_hi,
  scan_tset,
  scan_nonuniform,
  scan_conj2,
  scan_ak_regime,
};
std::string to_string(CampaignKind k);
CampaignKind parse_kind(const std::string& s);

struct Cell {
  PartStructure parts;
  std::vector<int> sizes;
  Predicate pred;
  std::optional<BigCount> expect_max;
  /// Known exception: the structural assertion is skipped and the reason
  /// recorded on the row.
  std::optional<std::string> exception;
};

struct Caps {
  std::uint64_t universe_cap = kDefaultUniverseCap;
  std::uint64_t graph_cap = kDefaultGraphCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t maxima_cap = kDefaultMaximaCap;
  std::uint64_t system_cap = 100'000;  // centre systems per weak-star cell
};

struct Campaign {
  std::string name;
  CampaignKind kind = CampaignKind::bound;
  Expectation mode = Expectation::record_only;
  std::vector<Cell> cells;
  Caps caps;
  bool all_maxima = true;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

/// Reads {"name","kind","mode","caps","all_maxima","samples","seed","cells":[
/// {"parts":[..],"r":n | "sizes":[..],"pred":"kind:t","expect_max":"..","exception":".."}]}.
Campaign campaign_from_json(const json& j);
json to_json(const Campaign& c);

CampaignReport run_campaign(const Campaign& c);

/// Exact maxima on a grid versus the star formula, with every maximum
/// classified. Cap and budget failures become per-row errors.
CampaignReport run_bound_campaign(const Campaign& c);
/// Non-uniform subsets of [n] (empty set excluded) against the parity case of
/// the Katona bound.
CampaignReport run_katona_campaign(const Campaign& c);
/// Projection and reduction identities on seeded random predicate-closed
/// families.
CampaignReport run_lemma1_suite(std::uint64_t samples, std::uint64_t seed);
/// Every centre system over the pair projections: whenever the consistent
/// family is a weak t-star it must be a t-star.
CampaignReport run_weak_star_suite(const std::vector<Cell>& cells, std::uint64_t system_cap = 100'000);
/// The four worked examples with their stated values.
CampaignReport run_example_suite();
/// Construction cardinalities against closed forms.
CampaignReport run_formula_suite();
/// Record-only probes of the open extremal questions.
CampaignReport run_conjecture_scan(CampaignKind which, const Campaign& c);

/// Built-in campaign by name; throws DomainError for unknown names.
Campaign builtin_campaign(const std::string& name);
std::vector<std::string> builtin_names();

/// Helpers shared by the campaign runners.
std::string sizes_str(const std::vector<int>& sizes);
ExtremalOptions extremal_options(const Campaign& c);

}  // namespace kmatch::harness
