#include "kmatch/serialize.hpp"

#include <istream>
#include <ostream>

#include "kmatch/errors.hpp"

namespace kmatch {
namespace {

json next_line(std::istream& is, const char* what) {
  std::string line;
  while (std::getline(is, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      try {
        return json::parse(line);
      } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed ") + what + " line: " + e.what());
      }
    }
  throw DomainError(std::string("unexpected end of input reading ") + what);
}

json header(const char* kind, const Universe& u) {
  json h;
  h["kind"] = kind;
  h["parts"] = to_json(u.parts());
  h["sizes"] = u.sizes();
  return h;
}

UniversePtr universe_from_header(const json& h, std::uint64_t cap) {
  try {
    const PartStructure parts(h.at("parts").get<std::vector<int>>());
    std::vector<int> sizes;
    if (h.contains("sizes")) sizes = h["sizes"].get<std::vector<int>>();
    else sizes.push_back(h.at("r").get<int>());
    return sizes.size() == 1 ? Universe::enumerate(parts, sizes.front(), cap)
                             : Universe::enumerate_levels(parts, sizes, cap);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad header: ") + e.what());
  }
}

}  // namespace

json to_json(const Matching& m) {
  json out = json::array();
  for (int e = 0; e < m.size(); ++e) {
    json edge = json::array();
    for (Vertex v : m.edge(e)) edge.push_back(v);
    out.push_back(std::move(edge));
  }
  return out;
}

Matching matching_from_json(const json& j, int k) {
  try {
    return Matching::from_edges(k, j.get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw DomainError(std::string("matching must be an array of integer tuples: ") + e.what());
  }
}

json to_json(const PartStructure& p) { return std::vector<int>(p.sizes().begin(), p.sizes().end()); }

json to_json(const StarClassification& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["t_star"] = c.t_star;
  j["t_set_star"] = c.t_set_star;
  j["weak_t_star"] = c.weak_t_star;
  j["weak_t_set_star"] = c.weak_t_set_star;
  j["star_centres"] = json::array();
  for (const auto& m : c.star_centres) j["star_centres"].push_back(to_json(m));
  j["set_star_centres"] = json::array();
  for (const auto& b : c.set_star_centres) j["set_star_centres"].push_back(b.sets);
  if (c.degenerate_centre) j["degenerate_centre"] = true;
  if (c.ambiguous_box) j["ambiguous_box"] = true;
  return j;
}

json to_json(const ExtremalReport& r) {
  json j;
  j["parts"] = to_json(r.parts);
  j["sizes"] = r.sizes;
  j["predicate"] = r.pred.str();
  if (r.pred.inferred_definition()) j["inferred_definition"] = true;
  j["universe_size"] = r.universe_size;
  j["max_size"] = r.max_size.str();
  j["formula_value"] = r.formula_value.str();
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  j["witness"] = json::array();
  for (const auto& m : r.witness.members()) j["witness"].push_back(to_json(m));
  j["witness_classification"] = to_json(r.witness_classification);
  if (r.maxima_enumerated) {
    if (r.maxima_overflow) {
      j["all_maxima_count"] = "overflow";
      j["partial_maxima_count"] = r.maxima_count;
    } else {
      j["all_maxima_count"] = r.maxima_count;
    }
    j["tally"] = r.tally;
    json ms = json::array();
    for (const auto& m : r.maxima) {
      json e;
      e["members"] = m.members;
      e["classification"] = to_json(m.classification);
      ms.push_back(std::move(e));
    }
    j["maxima"] = std::move(ms);
  }
  return j;
}

void write_universe(std::ostream& os, const Universe& u) {
  json h = header("universe", u);
  h["count"] = u.size();
  os << h.dump() << '\n';
  for (const auto& m : u.items()) os << to_json(m).dump() << '\n';
}

UniversePtr read_universe(std::istream& is, std::uint64_t cap) {
  const json h = next_line(is, "universe header");
  if (h.value("kind", "universe") != "universe") throw DomainError("not a universe file");
  UniversePtr u = universe_from_header(h, cap);
  if (h.contains("count") && h["count"].get<std::size_t>() != u->size())
    throw DomainError("universe header count " + h["count"].dump() + " differs from " + std::to_string(u->size()));
  const int k = u->parts().k();
  for (std::size_t i = 0; i < u->size(); ++i)
    if (matching_from_json(next_line(is, "universe item"), k) != (*u)[i])
      throw DomainError("universe item " + std::to_string(i) + " is out of order or foreign");
  return u;
}

void write_family(std::ostream& os, const Family& f, FamilyForm form) {
  json h = header("family", f.universe());
  h["form"] = form == FamilyForm::indices ? "indices" : "explicit";
  h["size"] = f.size();
  os << h.dump() << '\n';
  if (form == FamilyForm::indices) {
    os << json(f.indices()).dump() << '\n';
  } else {
    for (const auto& m : f.members()) os << to_json(m).dump() << '\n';
  }
}

Family read_family(std::istream& is, std::uint64_t cap) {
  const json h = next_line(is, "family header");
  if (h.value("kind", "") != "family") throw DomainError("not a family file");
  UniversePtr u = universe_from_header(h, cap);
  Family f(u);
  const std::size_t size = h.at("size").get<std::size_t>();
  const std::string form = h.value("form", "indices");
  if (form == "indices") {
    const json idx = next_line(is, "family indices");
    for (const auto& v : idx) {
      const auto i = v.get<std::size_t>();
      if (i >= u->size()) throw DomainError("member index " + std::to_string(i) + " outside universe");
      f.insert(i);
    }
  } else if (form == "explicit") {
    for (std::size_t n = 0; n < size; ++n) f.insert(matching_from_json(next_line(is, "family member"), u->parts().k()));
  } else {
    throw DomainError("unknown family form '" + form + "'");
  }
  if (f.size() != size) throw DomainError("family header size differs from members read");
  return f;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace kmatch
