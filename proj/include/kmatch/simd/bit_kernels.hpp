#pragma once

// Word-parallel kernels behind Bitset. Every variant must produce results
// identical to the scalar reference; tests/test_bit_kernels.cpp enforces it.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace kmatch::simd {

using Word = std::uint64_t;

struct BitKernels {
  std::string_view name;
  // dst[i] = a[i] & b[i]
  void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
  // dst[i] = a[i] & ~b[i]
  void (*andnot_into)(Word* dst, const Word* a, const Word* b, std::size_t n);
  std::size_t (*popcount)(const Word* a, std::size_t n);
  // popcount(a & b) without materialising the intersection
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  bool (*any)(const Word* a, std::size_t n);
};

const BitKernels& scalar_kernels();

/// nullptr when the build or the running CPU lacks AVX2.
const BitKernels* avx2_kernels();

/// All variants usable on this machine, scalar first.
std::vector<const BitKernels*> available_kernels();

/// Kernel set used by Bitset. Chosen once: the best available variant, unless
/// KMATCH_SIMD=scalar is set in the environment.
const BitKernels& active_kernels();

/// Override the active set (tests and benchmarks). Not thread-safe against
/// concurrent searches.
void set_active_kernels(const BitKernels& k);

}  // namespace kmatch::simd
