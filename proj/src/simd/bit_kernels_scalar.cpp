#include <bit>

#include "kmatch/simd/bit_kernels.hpp"

namespace kmatch::simd {

namespace {

void and_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

bool any(const Word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) return true;
  return false;
}

}  // namespace

const BitKernels& scalar_kernels() {
  static const BitKernels k{"scalar", and_into, andnot_into, popcount, and_popcount, any};
  return k;
}

}  // namespace kmatch::simd
