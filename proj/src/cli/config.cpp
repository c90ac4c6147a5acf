#include <cstdlib>
#include <string>

#include "kmatch/cli.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/search.hpp"

namespace kmatch::cli {
namespace {

std::optional<std::uint64_t> env_cap(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return std::uint64_t{x};
  } catch (const std::exception&) {
    throw DomainError(std::string(name) + " must be a non-negative integer, got '" + v + "'");
  }
}

}  // namespace

RunConfig default_config() {
  RunConfig c;
  c.universe_cap = env_cap("KMATCH_UNIVERSE_CAP");
  c.graph_cap = env_cap("KMATCH_GRAPH_CAP");
  c.node_budget = env_cap("KMATCH_NODE_BUDGET");
  c.maxima_cap = env_cap("KMATCH_MAXIMA_CAP");
  return c;
}

json to_json(const RunConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  if (!c.parts.empty()) j["parts"] = c.parts;
  if (c.r) j["r"] = *c.r;
  if (!c.sizes.empty()) j["sizes"] = c.sizes;
  if (c.subcommand == "search") {
    j["pred"] = c.pred;
    j["all_maxima"] = c.all_maxima;
    j["seed_with_star"] = c.seed_with_star;
  }
  if (!c.campaign.empty()) j["campaign"] = c.campaign;
  json caps = json::object();
  if (c.universe_cap) caps["universe"] = *c.universe_cap;
  if (c.graph_cap) caps["graph"] = *c.graph_cap;
  if (c.node_budget) caps["nodes"] = *c.node_budget;
  if (c.maxima_cap) caps["maxima"] = *c.maxima_cap;
  j["caps"] = caps;
  j["seed"] = c.seed;
  if (c.samples) j["samples"] = *c.samples;
  j["workers"] = c.workers;
  return j;
}

}  // namespace kmatch::cli
