#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kmatch/cli.hpp"
#include "kmatch/errors.hpp"
#include "kmatch/harness.hpp"

namespace kmatch::cli {
namespace {

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("bad size list '" + text + "'");
    }
  }
  if (out.empty()) throw DomainError("empty size list");
  return out;
}

std::vector<int> levels(const RunConfig& c) {
  if (!c.sizes.empty()) return c.sizes;
  if (c.r) return {*c.r};
  throw DomainError("give --r or --sizes");
}

ExtremalOptions extremal_options(const RunConfig& c) {
  ExtremalOptions o;
  o.universe_cap = c.universe_cap.value_or(kDefaultUniverseCap);
  o.graph_cap = c.graph_cap.value_or(kDefaultGraphCap);
  o.node_budget = c.node_budget.value_or(kDefaultNodeBudget);
  o.maxima_cap = c.maxima_cap.value_or(kDefaultMaximaCap);
  o.workers = c.workers;
  o.all_maxima = c.all_maxima;
  o.seed_with_star = c.seed_with_star;
  return o;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + path + "'");
  return f;
}

json envelope(const RunConfig& c) {
  json j;
  j["engine_version"] = KMATCH_VERSION;
  j["config"] = to_json(c);
  return j;
}

std::string tally_line(const ExtremalReport& rep) {
  std::ostringstream os;
  os << "max=" << rep.max_size;
  if (rep.maxima_overflow) {
    os << ", maxima>" << rep.maxima_count << " (overflow)";
    return os.str();
  }
  os << ", maxima=" << rep.maxima_count;
  const StarKind want = rep.pred.set_kind() ? StarKind::t_set_star : StarKind::t_star;
  if (rep.all_maxima_are(want)) {
    os << ", all " << to_string(want) << "s";
  } else {
    for (const auto& [k, v] : rep.tally) os << ", " << k << ":" << v;
    os << ", non-star maximum present";
  }
  return os.str();
}

harness::Campaign resolve_campaign(const RunConfig& c) {
  if (c.campaign.empty()) throw DomainError("give --campaign builtin:<name> or a campaign file");
  harness::Campaign camp;
  const std::string prefix = "builtin:";
  if (c.campaign.compare(0, prefix.size(), prefix) == 0) {
    camp = harness::builtin_campaign(c.campaign.substr(prefix.size()));
  } else {
    std::ifstream f(c.campaign);
    if (!f) throw DomainError("cannot read campaign file '" + c.campaign + "'");
    try {
      camp = harness::campaign_from_json(json::parse(f));
    } catch (const json::parse_error& e) {
      throw DomainError(std::string("campaign file is not valid JSON: ") + e.what());
    }
  }
  if (c.universe_cap) camp.caps.universe_cap = *c.universe_cap;
  if (c.graph_cap) camp.caps.graph_cap = *c.graph_cap;
  if (c.node_budget) camp.caps.node_budget = *c.node_budget;
  if (c.maxima_cap) camp.caps.maxima_cap = *c.maxima_cap;
  if (c.samples) camp.samples = *c.samples;
  camp.seed = c.seed;
  camp.workers = c.workers;
  return camp;
}

void emit_campaign(const RunConfig& c, harness::CampaignReport& rep) {
  if (c.out.empty()) return;
  json meta = envelope(c);
  for (auto& [k, v] : rep.meta.items()) meta[k] = v;
  rep.meta = meta;
  auto csv = open_out(c.out + ".csv");
  harness::write_csv(csv, rep, c.timings);
  auto js = open_out(c.out + ".json");
  js << harness::to_json(rep, c.timings).dump(2) << '\n';
}

void print_rows(const harness::CampaignReport& rep, std::ostream& out, bool all) {
  for (const auto& row : rep.rows) {
    if (!all && (row.verdict == harness::Verdict::pass || row.verdict == harness::Verdict::recorded)) continue;
    out << to_string(row.verdict) << "  " << row.label;
    for (const auto& [k, v] : row.fields)
      if (k != "parts" && k != "sizes" && k != "predicate") out << "  " << k << "=" << v;
    if (!row.note.empty()) out << "  # " << row.note;
    out << '\n';
  }
}

}  // namespace

int cmd_enumerate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const PartStructure parts = PartStructure::parse(c.parts);
  const std::vector<int> sizes = levels(c);
  const std::uint64_t cap = c.universe_cap.value_or(kDefaultUniverseCap);
  try {
    UniversePtr u = sizes.size() == 1 ? Universe::enumerate(parts, sizes.front(), cap)
                                      : Universe::enumerate_levels(parts, sizes, cap);
    if (!c.out.empty()) {
      auto f = open_out(c.out);
      write_universe(f, *u);
    }
    out << u->size() << '\n';
    return kOk;
  } catch (const UniverseTooLarge& e) {
    err << "error: " << e.what() << "\npredicted=" << e.predicted() << '\n';
    return kUsage;
  }
}

int cmd_search(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const PartStructure parts = PartStructure::parse(c.parts);
  const Predicate pred = Predicate::parse(c.pred);
  ExtremalReport rep;
  try {
    rep = extremal(parts, levels(c), pred, extremal_options(c));
  } catch (const UniverseTooLarge& e) {
    err << "error: " << e.what() << "\npredicted=" << e.predicted() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "aborted: " << e.what() << " after " << e.nodes() << " nodes; no answer\n";
    return kBudget;
  }
  if (rep.maxima_enumerated) {
    out << tally_line(rep) << '\n';
    out << "status=" << to_string(rep.status) << ", formula=" << rep.formula_value << '\n';
  } else {
    out << "max=" << rep.max_size << ", " << to_string(rep.status) << '\n';
    out << "formula=" << rep.formula_value << ", witness=" << to_string(rep.witness_classification.kind) << '\n';
  }
  if (pred.inferred_definition()) out << "note: " << pred.str() << " uses the projection-wise definition\n";

  if (!c.out.empty()) {
    json j = envelope(c);
    j["report"] = to_json(rep);
    auto js = open_out(c.out + ".json");
    js << j.dump(2) << '\n';
    auto csv = open_out(c.out + ".csv");
    csv << "parts,sizes,predicate,universe,formula,max,status,maxima,witness\n";
    csv << csv_field(parts.str()) << ',' << csv_field(harness::sizes_str(rep.sizes)) << ',' << pred.str() << ','
        << rep.universe_size << ',' << rep.formula_value << ',' << rep.max_size << ',' << to_string(rep.status) << ','
        << (rep.maxima_enumerated ? (rep.maxima_overflow ? "overflow" : std::to_string(rep.maxima_count)) : "")
        << ',' << to_string(rep.witness_classification.kind) << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream&) {
  harness::CampaignReport rep = harness::run_campaign(resolve_campaign(c));
  print_rows(rep, out, false);
  const std::size_t asserted = rep.count(harness::Verdict::pass) + rep.count(harness::Verdict::fail) +
                               rep.count(harness::Verdict::error);
  out << rep.summary() << '\n';
  out << rep.count(harness::Verdict::pass) << "/" << asserted << " passed";
  if (std::size_t a = rep.count(harness::Verdict::attention)) out << ", attention=" << a;
  out << '\n';
  emit_campaign(c, rep);
  return rep.ok() ? kOk : kAssertionFailed;
}

int cmd_scan(const RunConfig& c, std::ostream& out, std::ostream&) {
  harness::Campaign camp = resolve_campaign(c);
  if (camp.mode != harness::Expectation::record_only && camp.kind == harness::CampaignKind::bound)
    camp.mode = harness::Expectation::record_only;
  harness::CampaignReport rep = harness::run_campaign(camp);
  print_rows(rep, out, true);
  out << rep.summary() << '\n';
  out << "attention=" << rep.count(harness::Verdict::attention) << '\n';
  emit_campaign(c, rep);
  return rep.ok() ? kOk : kAssertionFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = default_config();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Exact extremal families of matchings in complete k-partite k-graphs", "kmatch"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(KMATCH_VERSION));

  std::string sizes_text;
  int r = 0;
  std::uint64_t universe_cap = 0, graph_cap = 0, node_budget = 0, maxima_cap = 0, samples = 0;

  auto add_shape = [&](CLI::App* s) {
    s->add_option("--parts", cfg.parts, "part sizes, e.g. 3,3,3")->required();
    auto* r_opt = s->add_option("--r", r, "edges per matching");
    s->add_option("--sizes", sizes_text, "several edge counts, e.g. 1,2")->excludes(r_opt);
  };
  auto add_caps = [&](CLI::App* s) {
    s->add_option("--universe-cap", universe_cap, "largest universe to enumerate");
    s->add_option("--graph-cap", graph_cap, "largest compatibility graph");
    s->add_option("--node-budget", node_budget, "branch-and-bound node budget");
    s->add_option("--maxima-cap", maxima_cap, "most maximum families to list");
    s->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* en = app.add_subcommand("enumerate", "list every matching of a universe");
  add_shape(en);
  add_caps(en);
  en->add_option("--out", cfg.out, "write the universe (JSON lines) to this path");

  auto* se = app.add_subcommand("search", "exact maximum family under a predicate");
  add_shape(se);
  add_caps(se);
  se->add_option("--pred", cfg.pred, "predicate kind:t, e.g. set-intersecting:2");
  se->add_flag("--all-maxima", cfg.all_maxima, "enumerate and classify every maximum");
  se->add_flag("--seed-with-star", cfg.seed_with_star, "start the bound at the star size");
  se->add_option("--out", cfg.out, "write PREFIX.json and PREFIX.csv");

  for (auto* s : {app.add_subcommand("verify", "run a campaign and check its assertions"),
                  app.add_subcommand("scan", "run a campaign, recording only")}) {
    s->add_option("--campaign", cfg.campaign, "builtin:<name> or a campaign JSON file")->required();
    add_caps(s);
    s->add_option("--samples", samples, "random samples for sampled suites");
    s->add_option("--seed", cfg.seed, "random seed");
    s->add_option("--out", cfg.out, "write PREFIX.csv and PREFIX.json");
    s->add_flag("--timings", cfg.timings, "include per-row runtimes in the reports");
    s->footer("built-in campaigns: " + [] {
      std::string names;
      for (const auto& n : harness::builtin_names()) names += (names.empty() ? "" : ", ") + n;
      return names + ", lemma1";
    }());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();
    auto set_if = [&](const char* flag, std::optional<std::uint64_t>& slot, std::uint64_t v) {
      if (sub->count(flag)) slot = v;
    };
    set_if("--universe-cap", cfg.universe_cap, universe_cap);
    set_if("--graph-cap", cfg.graph_cap, graph_cap);
    set_if("--node-budget", cfg.node_budget, node_budget);
    set_if("--maxima-cap", cfg.maxima_cap, maxima_cap);
    if (cfg.subcommand == "enumerate" || cfg.subcommand == "search") {
      if (sub->count("--r")) cfg.r = r;
      if (!sizes_text.empty()) cfg.sizes = parse_sizes(sizes_text);
    } else if (sub->count("--samples")) {
      cfg.samples = samples;
    }

    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg, out, err);
    if (cfg.subcommand == "search") return cmd_search(cfg, out, err);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
    return cmd_scan(cfg, out, err);
  } catch (const BudgetExceeded& e) {
    err << "aborted: " << e.what() << '\n';
    return kBudget;
  } catch (const UniverseTooLarge& e) {
    err << "error: " << e.what() << "\npredicted=" << e.predicted() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kAssertionFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace kmatch::cli
