#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "kmatch/simd/bit_kernels.hpp"

namespace kmatch {

/// Fixed-length dynamic bitset. Bulk operations route through the active
/// simd::BitKernels; bits past size() are always zero.
class Bitset {
 public:
  using Word = simd::Word;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const Word* data() const noexcept { return words_.data(); }
  Word* data() noexcept { return words_.data(); }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set_all() {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }
  /// Clears every bit at index <= i.
  void reset_through(std::size_t i) {
    const std::size_t w = i / kWordBits;
    for (std::size_t j = 0; j < w; ++j) words_[j] = 0;
    const std::size_t b = i % kWordBits;
    words_[w] &= (b == kWordBits - 1) ? Word{0} : ~((Word{2} << b) - 1);
  }

  std::size_t count() const { return simd::active_kernels().popcount(words_.data(), words_.size()); }
  bool any() const { return simd::active_kernels().any(words_.data(), words_.size()); }
  bool none() const { return !any(); }

  std::size_t and_count(const Bitset& o) const {
    assert(o.size_ == size_);
    return simd::active_kernels().and_popcount(words_.data(), o.words_.data(), words_.size());
  }
  /// *this = a & b
  void assign_and(const Bitset& a, const Bitset& b) {
    assert(a.size_ == size_ && b.size_ == size_);
    simd::active_kernels().and_into(words_.data(), a.words_.data(), b.words_.data(), words_.size());
  }
  Bitset& operator&=(const Bitset& o) {
    assign_and(*this, o);
    return *this;
  }
  /// *this &= ~o
  Bitset& subtract(const Bitset& o) {
    assert(o.size_ == size_);
    simd::active_kernels().andnot_into(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
  }

  std::size_t first() const { return next(0); }
  /// Smallest set index >= from, or npos.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return npos;
    std::size_t w = from / kWordBits;
    Word cur = words_[w] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (cur) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == words_.size()) return npos;
      cur = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word cur = words_[w];
      while (cur) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

 private:
  void trim() {
    if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace kmatch
