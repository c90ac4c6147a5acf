#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmatch/serialize.hpp"

namespace kmatch::cli {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string subcommand;
  std::string parts;
  std::optional<int> r;
  std::vector<int> sizes;
  std::string pred = "intersecting:1";
  bool all_maxima = false;
  // Unset caps fall back to the engine defaults (or a campaign's own caps).
  std::optional<std::uint64_t> universe_cap;
  std::optional<std::uint64_t> graph_cap;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::uint64_t> maxima_cap;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> samples;
  unsigned workers = 1;
  std::string out;
  std::string campaign;
  bool timings = false;
  bool seed_with_star = false;
};

/// Caps preset from KMATCH_UNIVERSE_CAP, KMATCH_GRAPH_CAP, KMATCH_NODE_BUDGET
/// and KMATCH_MAXIMA_CAP when those are set.
RunConfig default_config();
json to_json(const RunConfig& c);

int cmd_enumerate(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& c, std::ostream& out, std::ostream& err);

/// Parses arguments and dispatches; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmatch::cli
