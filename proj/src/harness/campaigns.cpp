#include <atomic>

#include "detail/parallel.hpp"
#include "harness/common.hpp"
#include "kmatch/combinat.hpp"
#include "kmatch/constructions.hpp"
#include "kmatch/errors.hpp"

namespace kmatch::harness {
namespace detail {

std::string cell_label(const Cell& cell) {
  std::string s = "(" + cell.parts.str() + ")";
  s += cell.sizes.size() == 1 ? " r=" + std::to_string(cell.sizes.front()) : " R={" + sizes_str(cell.sizes) + "}";
  return s + " " + cell.pred.str();
}

Row cell_row(const Cell& cell) {
  Row row;
  row.label = cell_label(cell);
  row.set("parts", cell.parts.str());
  row.set("sizes", sizes_str(cell.sizes));
  row.set("predicate", cell.pred.str());
  return row;
}

bool maxima_are_stars(const ExtremalReport& rep) {
  return rep.all_maxima_are(rep.pred.set_kind() ? StarKind::t_set_star : StarKind::t_star);
}

CellOutcome run_cell(const Cell& cell, const ExtremalOptions& opt) {
  CellOutcome out;
  out.row = cell_row(cell);
  Stopwatch clock;
  try {
    ExtremalReport rep = extremal(cell.parts, cell.sizes, cell.pred, opt);
    Row& row = out.row;
    row.set("universe", rep.universe_size);
    row.set("formula", rep.formula_value);
    row.set("max", rep.max_size);
    row.set("status", to_string(rep.status));
    if (rep.maxima_enumerated) {
      row.set("maxima", rep.maxima_overflow ? "overflow>" + std::to_string(rep.maxima_count)
                                            : std::to_string(rep.maxima_count));
      std::string tally;
      for (const auto& [k, v] : rep.tally) tally += (tally.empty() ? "" : ";") + k + ":" + std::to_string(v);
      row.set("tally", tally);
    }
    if (cell.pred.inferred_definition()) row.set("inferred_definition", true);
    row.detail = to_json(rep);
    out.report = std::move(rep);
  } catch (const UniverseTooLarge& e) {
    out.error = std::string(e.what());
  } catch (const BudgetExceeded& e) {
    out.error = std::string(e.what());
  } catch (const InternalError& e) {
    out.error = std::string("internal inconsistency: ") + e.what();
  } catch (const DomainError& e) {
    out.error = std::string(e.what());
  }
  out.row.seconds = clock.seconds();
  return out;
}

std::vector<Row> map_cells(const std::vector<Cell>& cells, unsigned workers,
                           const std::function<Row(const Cell&, unsigned)>& f) {
  std::vector<Row> rows(cells.size());
  const bool across = workers > 1 && cells.size() > 1;
  std::atomic<std::size_t> next{0};
  kmatch::detail::run_workers(across ? workers : 1, [&](unsigned) {
    for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
      rows[i] = f(cells[i], across ? 1 : workers);
  });
  return rows;
}

json campaign_meta(const Campaign& c) {
  json m;
  m["engine_version"] = KMATCH_VERSION;
  m["campaign"] = to_json(c);
  return m;
}

}  // namespace detail

std::string to_string(CampaignKind k) {
  switch (k) {
    case CampaignKind::bound: return "bound";
    case CampaignKind::katona: return "katona";
    case CampaignKind::lemma1: return "projection-properties";
    case CampaignKind::weak_star: return "weak-star";
    case CampaignKind::examples: return "examples";
    case CampaignKind::formulas: return "formulas";
    case CampaignKind::scan_hi: return "scan-hi";
    case CampaignKind::scan_tset: return "scan-tset";
    case CampaignKind::scan_nonuniform: return "scan-nonuniform";
    case CampaignKind::scan_conj2: return "scan-conj2";
    case CampaignKind::scan_ak_regime: return "scan-ak-regime";
  }
  return "?";
}

CampaignKind parse_kind(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(CampaignKind::scan_ak_regime); ++i)
    if (to_string(static_cast<CampaignKind>(i)) == s) return static_cast<CampaignKind>(i);
  throw DomainError("unknown campaign kind '" + s + "'");
}

Campaign campaign_from_json(const json& j) {
  try {
    Campaign c;
    c.name = j.value("name", "campaign");
    c.kind = parse_kind(j.value("kind", "bound"));
    c.mode = parse_expectation(j.value("mode", "record-only"));
    c.all_maxima = j.value("all_maxima", true);
    c.samples = j.value("samples", std::uint64_t{1000});
    c.seed = j.value("seed", std::uint64_t{1});
    c.workers = j.value("workers", 1u);
    if (j.contains("caps")) {
      const json& k = j["caps"];
      c.caps.universe_cap = k.value("universe", c.caps.universe_cap);
      c.caps.graph_cap = k.value("graph", c.caps.graph_cap);
      c.caps.node_budget = k.value("nodes", c.caps.node_budget);
      c.caps.maxima_cap = k.value("maxima", c.caps.maxima_cap);
      c.caps.system_cap = k.value("systems", c.caps.system_cap);
    }
    for (const json& cj : j.value("cells", json::array())) {
      Cell cell;
      if (cj.contains("n")) {
        const int n = cj["n"].get<int>();
        cell.parts = PartStructure{n};
        if (c.kind == CampaignKind::katona)
          for (int s = 1; s <= n; ++s) cell.sizes.push_back(s);
      } else {
        cell.parts = PartStructure(cj.at("parts").get<std::vector<int>>());
      }
      if (cj.contains("sizes")) cell.sizes = cj["sizes"].get<std::vector<int>>();
      else if (cj.contains("r")) cell.sizes = {cj["r"].get<int>()};
      if (cell.sizes.empty()) throw DomainError("cell needs \"r\" or \"sizes\"");
      if (cj.contains("pred")) cell.pred = Predicate::parse(cj["pred"].get<std::string>());
      else if (cj.contains("t")) cell.pred = Predicate{PredicateKind::intersecting, cj["t"].get<int>()};
      if (cj.contains("expect_max")) cell.expect_max = BigCount(BigInt(cj["expect_max"].get<std::string>()));
      if (cj.contains("exception")) cell.exception = cj["exception"].get<std::string>();
      c.cells.push_back(std::move(cell));
    }
    return c;
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad campaign definition: ") + e.what());
  }
}

json to_json(const Campaign& c) {
  json j;
  j["name"] = c.name;
  j["kind"] = to_string(c.kind);
  j["mode"] = to_string(c.mode);
  j["caps"] = {{"universe", c.caps.universe_cap},
               {"graph", c.caps.graph_cap},
               {"nodes", c.caps.node_budget},
               {"maxima", c.caps.maxima_cap},
               {"systems", c.caps.system_cap}};
  j["all_maxima"] = c.all_maxima;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  json cells = json::array();
  for (const auto& cell : c.cells) {
    json cj;
    cj["parts"] = to_json(cell.parts);
    cj["sizes"] = cell.sizes;
    cj["pred"] = cell.pred.str();
    if (cell.expect_max) cj["expect_max"] = cell.expect_max->str();
    if (cell.exception) cj["exception"] = *cell.exception;
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j;
}

CampaignReport run_bound_campaign(const Campaign& c) {
  CampaignReport rep;
  rep.name = c.name;
  rep.mode = c.mode;
  rep.meta = detail::campaign_meta(c);
  const bool need_maxima = c.all_maxima || c.mode == Expectation::assert_uniqueness;

  rep.rows = detail::map_cells(c.cells, c.workers, [&](const Cell& cell, unsigned inner) {
    ExtremalOptions opt = extremal_options(c);
    opt.workers = inner;
    opt.all_maxima = need_maxima;
    detail::CellOutcome out = detail::run_cell(cell, opt);
    Row& row = out.row;
    if (!out.report) {
      row.verdict = c.mode == Expectation::record_only ? Verdict::attention : Verdict::error;
      row.note = out.error;
      return row;
    }
    const ExtremalReport& r = *out.report;
    const BigCount expected = cell.expect_max.value_or(r.formula_value);
    if (cell.expect_max) row.set("expected", expected);
    const bool size_ok = r.max_size == expected;
    const bool structure_ok = detail::maxima_are_stars(r);

    switch (c.mode) {
      case Expectation::assert_equality:
        row.verdict = size_ok ? Verdict::pass : Verdict::fail;
        if (!size_ok) row.note = "maximum " + r.max_size.str() + " differs from expected " + expected.str();
        break;
      case Expectation::assert_uniqueness:
        if (!size_ok) {
          row.verdict = Verdict::fail;
          row.note = "maximum " + r.max_size.str() + " differs from expected " + expected.str();
        } else if (cell.exception) {
          row.verdict = Verdict::pass;
          row.note = "structure not asserted: " + *cell.exception;
        } else if (r.maxima_overflow) {
          row.verdict = Verdict::error;
          row.note = "maxima overflow; uniqueness not checked";
        } else {
          row.verdict = structure_ok ? Verdict::pass : Verdict::fail;
          if (!structure_ok) row.note = "a maximum is not a star";
        }
        break;
      case Expectation::record_only:
        row.verdict = Verdict::recorded;
        if (!size_ok) {
          row.verdict = Verdict::attention;
          row.note = "maximum " + r.max_size.str() + " vs formula " + expected.str();
        } else if (r.maxima_enumerated && !r.maxima_overflow && !structure_ok) {
          row.verdict = cell.exception ? Verdict::recorded : Verdict::attention;
          row.note = cell.exception ? "non-star maximum (" + *cell.exception + ")" : "non-star maximum present";
        }
        break;
    }
    return row;
  });
  return rep;
}

CampaignReport run_katona_campaign(const Campaign& c) {
  CampaignReport rep;
  rep.name = c.name;
  rep.mode = c.mode;
  rep.meta = detail::campaign_meta(c);
  rep.rows = detail::map_cells(c.cells, c.workers, [&](const Cell& cell, unsigned inner) {
    const int n = cell.parts.size(0);
    const int t = cell.pred.t;
    const int l = (n + t) / 2;
    const bool even = (n + t) % 2 == 0;
    const auto [al, alx] = katona_sizes(n, l);
    const BigCount expected = even ? al : alx;

    ExtremalOptions opt = extremal_options(c);
    opt.workers = inner;
    opt.all_maxima = false;
    Cell probe = cell;
    probe.expect_max = expected;
    detail::CellOutcome out = detail::run_cell(probe, opt);
    Row& row = out.row;
    row.label = "n=" + std::to_string(n) + " t=" + std::to_string(t);
    row.set("n", n).set("t", t).set("l", l).set("case", even ? "n+t=2l" : "n+t=2l+1");
    row.set("katona", expected);
    if (!out.report) {
      row.verdict = Verdict::error;
      row.note = out.error;
      return row;
    }
    const Family family = even ? katona_family(n, l, std::nullopt, false) : katona_family(n, l, 1, false);
    const bool family_ok = family.size() == expected.to_u64() && family_satisfies(family, cell.pred);
    row.set("construction", family.size());
    const bool size_ok = out.report->max_size == expected;
    const bool ok = size_ok && family_ok;
    row.verdict = c.mode == Expectation::record_only ? (ok ? Verdict::recorded : Verdict::attention)
                                                     : (ok ? Verdict::pass : Verdict::fail);
    if (!size_ok) row.note = "clique maximum " + out.report->max_size.str() + " differs from " + expected.str();
    else if (!family_ok) row.note = "construction is not a maximum t-intersecting family";
    return row;
  });
  return rep;
}

CampaignReport run_campaign(const Campaign& c) {
  switch (c.kind) {
    case CampaignKind::bound: return run_bound_campaign(c);
    case CampaignKind::katona: return run_katona_campaign(c);
    case CampaignKind::lemma1: {
      CampaignReport r = run_lemma1_suite(c.samples, c.seed);
      r.name = c.name;
      r.meta = detail::campaign_meta(c);
      return r;
    }
    case CampaignKind::weak_star: {
      CampaignReport r = run_weak_star_suite(c.cells, c.caps.system_cap);
      r.name = c.name;
      r.meta = detail::campaign_meta(c);
      return r;
    }
    case CampaignKind::examples: {
      CampaignReport r = run_example_suite();
      r.name = c.name;
      r.meta = detail::campaign_meta(c);
      return r;
    }
    case CampaignKind::formulas: {
      CampaignReport r = run_formula_suite();
      r.name = c.name;
      r.meta = detail::campaign_meta(c);
      return r;
    }
    case CampaignKind::scan_hi:
    case CampaignKind::scan_tset:
    case CampaignKind::scan_nonuniform:
    case CampaignKind::scan_conj2:
    case CampaignKind::scan_ak_regime: return run_conjecture_scan(c.kind, c);
  }
  throw InternalError("unhandled campaign kind");
}

}  // namespace kmatch::harness
