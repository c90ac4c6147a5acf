#include "kmatch/centre.hpp"

#include <algorithm>
#include <bit>

#include "kmatch/errors.hpp"

namespace kmatch {

BoxCentre BoxCentre::from_sets(const std::vector<std::vector<int>>& sets) {
  BoxCentre out;
  for (const auto& s : sets) {
    std::vector<Vertex> v;
    for (int x : s) {
      if (x < 1 || x > kMaxPartSize) throw DomainError("box vertex out of range");
      v.push_back(static_cast<Vertex>(x));
    }
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw DomainError("box side has repeated vertices");
    out.sets.push_back(std::move(v));
  }
  if (!out.sets.empty())
    for (const auto& s : out.sets)
      if (s.size() != out.sets.front().size()) throw DomainError("box sides must all have size t");
  return out;
}

BoxCentre BoxCentre::spanned_by(const Matching& edges) {
  BoxCentre out;
  for (int p = 0; p < edges.arity(); ++p) out.sets.push_back(vertex_shadow(edges, p));
  return out;
}

std::uint64_t BoxCentre::mask(int part) const {
  std::uint64_t m = 0;
  for (Vertex v : sets.at(static_cast<std::size_t>(part))) m |= std::uint64_t{1} << (v - 1);
  return m;
}

void BoxCentre::validate(const PartStructure& parts) const {
  if (arity() != parts.k()) throw DomainError("box arity differs from the number of parts");
  if (t() < 1) throw DomainError("box sides must be non-empty");
  for (int p = 0; p < arity(); ++p) {
    const auto& s = sets[static_cast<std::size_t>(p)];
    if (static_cast<int>(s.size()) != t()) throw DomainError("box sides must all have size t");
    if (s.back() > parts.size(p)) throw DomainError("box vertex outside its part");
  }
}

int BoxCentre::edges_inside(const Matching& p) const {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(arity()));
  const int k = std::min(p.arity(), arity());
  for (int q = 0; q < k; ++q) masks[static_cast<std::size_t>(q)] = mask(q);
  int inside = 0;
  for (int e = 0; e < p.size(); ++e) {
    bool in = true;
    for (int q = 0; q < k && in; ++q)
      in = (masks[static_cast<std::size_t>(q)] >> (p.at(e, q) - 1)) & 1u;
    inside += in;
  }
  return inside;
}

BoxCentre BoxCentre::complement(const PartStructure& parts) const {
  BoxCentre out;
  for (int p = 0; p < arity(); ++p) {
    std::vector<Vertex> s;
    const std::uint64_t m = mask(p);
    for (int v = 1; v <= parts.size(p); ++v)
      if (!((m >> (v - 1)) & 1u)) s.push_back(static_cast<Vertex>(v));
    out.sets.push_back(std::move(s));
  }
  return out;
}

std::string BoxCentre::str() const {
  std::string out;
  for (std::size_t p = 0; p < sets.size(); ++p) {
    if (p) out += 'x';
    out += '{';
    for (std::size_t i = 0; i < sets[p].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(sets[p][i]);
    }
    out += '}';
  }
  return out;
}

}  // namespace kmatch
