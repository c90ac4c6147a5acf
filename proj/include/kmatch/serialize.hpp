#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "kmatch/matchings.hpp"
#include "kmatch/predicates.hpp"
#include "kmatch/search.hpp"

namespace kmatch {

using json = nlohmann::ordered_json;

/// [[x_1,...,x_k], ...] in canonical edge order.
json to_json(const Matching& m);
/// Accepts any edge order; validates and canonicalises. Throws DomainError.
Matching matching_from_json(const json& j, int k);

json to_json(const PartStructure& p);
json to_json(const StarClassification& c);
json to_json(const ExtremalReport& r);

/// Line-delimited: a header object {"kind":"universe","parts","sizes","count"}
/// followed by one matching per line.
void write_universe(std::ostream& os, const Universe& u);
/// Re-enumerates from the header and checks every listed item against it.
UniversePtr read_universe(std::istream& is, std::uint64_t cap = kDefaultUniverseCap);

enum class FamilyForm { indices, explicit_matchings };

/// Header {"kind":"family","parts","sizes","form","size"} then either one line
/// holding the sorted member indices or one matching per line.
void write_family(std::ostream& os, const Family& f, FamilyForm form = FamilyForm::indices);
/// Builds a fresh universe from the header and reads either form.
Family read_family(std::istream& is, std::uint64_t cap = kDefaultUniverseCap);

/// RFC 4180 quoting when needed.
std::string csv_field(const std::string& s);

}  // namespace kmatch
