// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kmatch/simd/bit_kernels.hpp"

namespace kmatch::simd {

namespace {

// Nibble-lookup popcount of each byte, summed into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t hsum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void and_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void andnot_into(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

std::size_t popcount(const Word* a, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  std::size_t c = hsum(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_popcount(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  std::size_t c = hsum(acc);
  for (; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

bool any(const Word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = load(a + i);
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < n; ++i)
    if (a[i]) return true;
  return false;
}

}  // namespace

const BitKernels& avx2_kernel_table() {
  static const BitKernels k{"avx2", and_into, andnot_into, popcount, and_popcount, any};
  return k;
}

}  // namespace kmatch::simd
