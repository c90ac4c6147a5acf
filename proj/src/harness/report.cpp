#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "kmatch/errors.hpp"
#include "kmatch/harness.hpp"

namespace kmatch::harness {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::assert_equality: return "assert-equality";
    case Expectation::assert_uniqueness: return "assert-uniqueness";
    case Expectation::record_only: return "record-only";
  }
  return "?";
}

Expectation parse_expectation(const std::string& s) {
  for (auto e : {Expectation::assert_equality, Expectation::assert_uniqueness, Expectation::record_only})
    if (to_string(e) == s) return e;
  throw DomainError("unknown expectation mode '" + s + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::recorded: return "RECORDED";
    case Verdict::attention: return "ATTENTION";
    case Verdict::skipped: return "SKIPPED";
    case Verdict::error: return "ERROR";
  }
  return "?";
}

Row& Row::set(const std::string& key, std::string value) {
  for (auto& [k, v] : fields)
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  fields.emplace_back(key, std::move(value));
  return *this;
}

std::string Row::get(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return {};
}

std::size_t CampaignReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const Row& r) { return r.verdict == v; }));
}

std::string CampaignReport::summary() const {
  std::ostringstream os;
  os << name << ": " << rows.size() << " rows";
  for (auto v : {Verdict::pass, Verdict::fail, Verdict::recorded, Verdict::attention, Verdict::skipped, Verdict::error})
    if (std::size_t n = count(v)) os << ", " << n << ' ' << to_string(v);
  return os.str();
}

std::vector<const Row*> CampaignReport::find(const std::string& prefix) const {
  std::vector<const Row*> out;
  for (const auto& r : rows)
    if (r.label.compare(0, prefix.size(), prefix) == 0) out.push_back(&r);
  return out;
}

namespace {

std::string seconds_str(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << s;
  return os.str();
}

}  // namespace

void write_csv(std::ostream& os, const CampaignReport& r, bool timings) {
  std::vector<std::string> cols;
  for (const auto& row : r.rows)
    for (const auto& [k, v] : row.fields)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);

  os << "campaign,case";
  for (const auto& c : cols) os << ',' << csv_field(c);
  os << ",verdict,note";
  if (timings) os << ",seconds";
  os << '\n';
  for (const auto& row : r.rows) {
    os << csv_field(r.name) << ',' << csv_field(row.label);
    for (const auto& c : cols) os << ',' << csv_field(row.get(c));
    os << ',' << to_string(row.verdict) << ',' << csv_field(row.note);
    if (timings) os << ',' << seconds_str(row.seconds);
    os << '\n';
  }
}

json to_json(const CampaignReport& r, bool timings) {
  json j;
  j["campaign"] = r.name;
  j["mode"] = to_string(r.mode);
  j["meta"] = r.meta;
  json counts = json::object();
  for (auto v : {Verdict::pass, Verdict::fail, Verdict::recorded, Verdict::attention, Verdict::skipped, Verdict::error})
    counts[to_string(v)] = r.count(v);
  j["counts"] = counts;
  j["verdict"] = r.ok() ? "ok" : "failed";
  json rows = json::array();
  for (const auto& row : r.rows) {
    json o;
    o["case"] = row.label;
    json f = json::object();
    for (const auto& [k, v] : row.fields) f[k] = v;
    o["fields"] = std::move(f);
    o["verdict"] = to_string(row.verdict);
    if (!row.note.empty()) o["note"] = row.note;
    if (!row.detail.empty()) o["detail"] = row.detail;
    if (timings) o["seconds"] = seconds_str(row.seconds);
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string sizes_str(const std::vector<int>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s;
}

ExtremalOptions extremal_options(const Campaign& c) {
  ExtremalOptions o;
  o.universe_cap = c.caps.universe_cap;
  o.graph_cap = c.caps.graph_cap;
  o.node_budget = c.caps.node_budget;
  o.maxima_cap = c.caps.maxima_cap;
  o.workers = c.workers;
  o.all_maxima = c.all_maxima;
  return o;
}

}  // namespace kmatch::harness
