#include "kmatch/matchings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "kmatch/errors.hpp"

namespace kmatch {

// ---------------------------------------------------------------- PartStructure

PartStructure::PartStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw DomainError("part structure needs k >= 1 parts");
  for (int n : sizes_) {
    if (n < 1) throw DomainError("part sizes must be positive");
    if (n > kMaxPartSize) throw DomainError("part size " + std::to_string(n) + " exceeds " + std::to_string(kMaxPartSize));
  }
}

PartStructure PartStructure::parse(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      sizes.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw DomainError("cannot parse part list '" + text + "'");
    }
  }
  return PartStructure(std::move(sizes));
}

int PartStructure::min() const { return *std::min_element(sizes_.begin(), sizes_.end()); }

bool PartStructure::all_equal(int n) const {
  return std::all_of(sizes_.begin(), sizes_.end(), [n](int s) { return s == n; });
}

PartStructure PartStructure::without(int part) const {
  if (k() < 2) throw DomainError("cannot remove a part from a 1-part structure");
  if (part < 0 || part >= k()) throw DomainError("part index out of range");
  std::vector<int> s = sizes_;
  s.erase(s.begin() + part);
  return PartStructure(std::move(s));
}

std::string PartStructure::str() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

// --------------------------------------------------------------------- Matching

namespace {

void canonicalise(int k, std::vector<Vertex>& coords) {
  const std::size_t r = k ? coords.size() / static_cast<std::size_t>(k) : 0;
  std::vector<std::vector<Vertex>> rows(r);
  for (std::size_t e = 0; e < r; ++e)
    rows[e].assign(coords.begin() + static_cast<long>(e * k), coords.begin() + static_cast<long>((e + 1) * k));
  std::sort(rows.begin(), rows.end());
  coords.clear();
  for (auto& row : rows) coords.insert(coords.end(), row.begin(), row.end());
}

void check_disjoint(int k, const std::vector<Vertex>& coords) {
  const std::size_t r = coords.size() / static_cast<std::size_t>(k);
  for (int part = 0; part < k; ++part) {
    std::uint64_t seen = 0;
    for (std::size_t e = 0; e < r; ++e) {
      const Vertex v = coords[e * k + part];
      if (v < 1 || v > kMaxPartSize) throw DomainError("vertex " + std::to_string(v) + " out of range");
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (seen & bit)
        throw DomainError("edges share vertex " + std::to_string(v) + " in part " + std::to_string(part + 1));
      seen |= bit;
    }
  }
}

}  // namespace

Matching Matching::from_edges(int k, const std::vector<std::vector<int>>& edges) {
  if (k < 1) throw DomainError("matching arity must be >= 1");
  std::vector<Vertex> coords;
  coords.reserve(edges.size() * static_cast<std::size_t>(k));
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != k) throw DomainError("edge arity differs from matching arity");
    for (int v : e) {
      if (v < 1 || v > kMaxPartSize) throw DomainError("vertex " + std::to_string(v) + " out of range");
      coords.push_back(static_cast<Vertex>(v));
    }
  }
  check_disjoint(k, coords);
  canonicalise(k, coords);
  return Matching(k, std::move(coords));
}

Matching::Matching(std::initializer_list<std::initializer_list<int>> edges) {
  if (edges.size() == 0) throw DomainError("arity cannot be inferred from an empty edge list");
  std::vector<std::vector<int>> e;
  for (const auto& row : edges) e.emplace_back(row);
  *this = from_edges(static_cast<int>(e.front().size()), e);
}

Matching Matching::from_canonical(int k, std::vector<Vertex> coords) { return Matching(k, std::move(coords)); }

bool Matching::contains_edge(std::span<const Vertex> e) const {
  if (static_cast<int>(e.size()) != k_) return false;
  // edges are sorted and have distinct first coordinates
  for (int i = 0; i < size(); ++i) {
    auto mine = edge(i);
    if (mine[0] == e[0]) return std::equal(mine.begin(), mine.end(), e.begin());
    if (mine[0] > e[0]) return false;
  }
  return false;
}

bool Matching::fits(const PartStructure& parts) const {
  if (parts.k() != k_) return false;
  for (int e = 0; e < size(); ++e)
    for (int p = 0; p < k_; ++p)
      if (at(e, p) > parts.size(p)) return false;
  return true;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (int e = 0; e < size(); ++e) out.emplace_back(edge(e).begin(), edge(e).end());
  return out;
}

std::string Matching::str() const {
  std::string out = "{";
  for (int e = 0; e < size(); ++e) {
    if (e) out += ',';
    out += '(';
    for (int p = 0; p < k_; ++p) {
      if (p) out += ',';
      out += std::to_string(at(e, p));
    }
    out += ')';
  }
  return out + "}";
}

std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                b.coords_.end());
}

std::size_t MatchingHash::operator()(const Matching& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.arity()) * 0x9e3779b97f4a7c15ULL;
  for (Vertex v : m.coords()) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

// --------------------------------------------------------------------- Universe

namespace {

// Depth-first over edges; each edge is chosen part by part. Edges are emitted
// with strictly increasing first coordinate, which makes the output canonical
// and lexicographically ordered.
class Enumerator {
 public:
  Enumerator(const PartStructure& parts, int r, std::vector<Matching>& out)
      : parts_(parts), r_(r), k_(parts.k()), used_(static_cast<std::size_t>(parts.k()), 0), out_(out) {
    coords_.reserve(static_cast<std::size_t>(r * k_));
  }

  void run() { next_edge(0, 0); }

 private:
  void next_edge(int e, int prev_first) {
    if (e == r_) {
      out_.push_back(Matching::from_canonical(k_, coords_));
      return;
    }
    const int n0 = parts_.size(0);
    for (int x = prev_first + 1; x <= n0 - (r_ - e - 1); ++x) {
      coords_.push_back(static_cast<Vertex>(x));
      next_coord(e, 1, x);
      coords_.pop_back();
    }
  }

  void next_coord(int e, int part, int first) {
    if (part == k_) {
      next_edge(e + 1, first);
      return;
    }
    std::uint64_t& used = used_[static_cast<std::size_t>(part)];
    for (int v = 1; v <= parts_.size(part); ++v) {
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (used & bit) continue;
      used |= bit;
      coords_.push_back(static_cast<Vertex>(v));
      next_coord(e, part + 1, first);
      coords_.pop_back();
      used &= ~bit;
    }
  }

  const PartStructure& parts_;
  int r_;
  int k_;
  std::vector<std::uint64_t> used_;
  std::vector<Vertex> coords_;
  std::vector<Matching>& out_;
};

}  // namespace

BigCount Universe::predicted_size(const PartStructure& parts, std::span<const int> sizes) {
  BigCount total = 0;
  for (int r : sizes) total += count_matchings(parts.sizes(), r);
  return total;
}

UniversePtr Universe::enumerate(const PartStructure& parts, int r, std::uint64_t cap) {
  if (r < 1 || r > parts.min())
    throw DomainError("matching size r=" + std::to_string(r) + " must satisfy 1 <= r <= min part");
  return enumerate_levels(parts, {r}, cap);
}

UniversePtr Universe::enumerate_levels(const PartStructure& parts, std::vector<int> sizes, std::uint64_t cap) {
  if (parts.k() == 0) throw DomainError("empty part structure");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.empty()) throw DomainError("no matching sizes requested");
  for (int r : sizes)
    if (r < 0 || r > parts.min()) throw DomainError("matching size " + std::to_string(r) + " out of range");

  const BigCount predicted = predicted_size(parts, sizes);
  if (predicted > BigCount(cap))
    throw UniverseTooLarge("universe too large: " + predicted.str() + " matchings exceeds cap " + std::to_string(cap),
                           predicted.str());

  std::shared_ptr<Universe> u(new Universe());
  u->parts_ = parts;
  u->sizes_ = sizes;
  u->items_.reserve(predicted.to_u64());
  for (int r : sizes) {
    u->offsets_.push_back(u->items_.size());
    Enumerator(parts, r, u->items_).run();
  }
  if (BigCount(u->items_.size()) != predicted) throw InternalError("enumeration disagrees with count_matchings");
  return u;
}

int Universe::r() const {
  if (!uniform()) throw DomainError("universe has several matching sizes");
  return sizes_.front();
}

std::pair<std::size_t, std::size_t> Universe::level_range(int r) const {
  auto it = std::lower_bound(sizes_.begin(), sizes_.end(), r);
  if (it == sizes_.end() || *it != r) return {0, 0};
  const auto l = static_cast<std::size_t>(it - sizes_.begin());
  const std::size_t end = l + 1 < offsets_.size() ? offsets_[l + 1] : items_.size();
  return {offsets_[l], end};
}

std::optional<std::size_t> Universe::index_of(const Matching& m) const {
  if (m.arity() != parts_.k()) return std::nullopt;
  auto [b, e] = level_range(m.size());
  auto first = items_.begin() + static_cast<long>(b);
  auto last = items_.begin() + static_cast<long>(e);
  auto it = std::lower_bound(first, last, m);
  if (it == last || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - items_.begin());
}

// ----------------------------------------------------------------------- Family

Family::Family(UniversePtr u) : universe_(std::move(u)), bits_(universe_->size()) {}

Family::Family(UniversePtr u, Bitset members) : universe_(std::move(u)), bits_(std::move(members)) {
  if (bits_.size() != universe_->size()) throw DomainError("membership bitset length differs from universe size");
}

bool Family::contains(const Matching& m) const {
  auto idx = universe_->index_of(m);
  return idx && bits_.test(*idx);
}

void Family::insert(const Matching& m) {
  auto idx = universe_->index_of(m);
  if (!idx) throw DomainError("matching " + m.str() + " is not in the universe");
  bits_.set(*idx);
}

std::vector<Matching> Family::members() const {
  std::vector<Matching> out;
  bits_.for_each([&](std::size_t i) { out.push_back((*universe_)[i]); });
  return out;
}

void Family::require_same_universe(const Family& other) const {
  if (universe_ != other.universe_) throw DomainError("families belong to different universes");
}

// -------------------------------------------------------------------- operators

namespace {

void check_part(const Matching& p, int i) {
  if (i < 0 || i >= p.arity()) throw DomainError("part index " + std::to_string(i) + " out of range");
}

}  // namespace

PairProjection project_pair(const Matching& p, int i, int j) {
  check_part(p, i);
  check_part(p, j);
  if (i == j) throw DomainError("pair projection needs distinct parts");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(p.size()));
  for (int e = 0; e < p.size(); ++e) pairs.emplace_back(p.at(e, i), p.at(e, j));
  std::sort(pairs.begin(), pairs.end());
  std::vector<Vertex> coords;
  coords.reserve(pairs.size() * 2);
  for (auto [a, b] : pairs) {
    coords.push_back(a);
    coords.push_back(b);
  }
  return {Matching::from_canonical(2, std::move(coords)), i, j};
}

std::vector<Matching> project_all(const Matching& p, int i) {
  check_part(p, i);
  std::vector<Matching> out;
  for (int j = 0; j < p.arity(); ++j)
    if (j != i) out.push_back(project_pair(p, i, j).pairs);
  return out;
}

Matching drop_part(const Matching& p, int j) {
  if (p.arity() < 2) throw DomainError("cannot drop a part from a 1-part matching");
  check_part(p, j);
  const int k = p.arity();
  std::vector<Vertex> coords;
  coords.reserve(static_cast<std::size_t>(p.size() * (k - 1)));
  for (int e = 0; e < p.size(); ++e)
    for (int q = 0; q < k; ++q)
      if (q != j) coords.push_back(p.at(e, q));
  if (j == 0) canonicalise(k - 1, coords);
  return Matching::from_canonical(k - 1, std::move(coords));
}

std::vector<Vertex> vertex_shadow(const Matching& p, int i) {
  check_part(p, i);
  std::vector<Vertex> out;
  for (int e = 0; e < p.size(); ++e) out.push_back(p.at(e, i));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t shadow_mask(const Matching& p, int i) {
  std::uint64_t m = 0;
  for (int e = 0; e < p.size(); ++e) m |= std::uint64_t{1} << (p.at(e, i) - 1);
  return m;
}

std::vector<PairProjection> restrict_family(const Family& f, int i, int j, const Matching& x) {
  std::vector<PairProjection> out;
  f.bits().for_each([&](std::size_t idx) {
    const Matching& p = f.universe()[idx];
    if (reduce(p, i, j) == x) out.push_back(project_pair(p, i, j));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<Matching, std::vector<PairProjection>>> partition_by_reduction(const Family& f, int i, int j) {
  std::map<Matching, std::vector<PairProjection>> groups;
  f.bits().for_each([&](std::size_t idx) {
    const Matching& p = f.universe()[idx];
    groups[reduce(p, i, j)].push_back(project_pair(p, i, j));
  });
  std::vector<std::pair<Matching, std::vector<PairProjection>>> out;
  for (auto& [x, v] : groups) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    out.emplace_back(x, std::move(v));
  }
  return out;
}

}  // namespace kmatch
