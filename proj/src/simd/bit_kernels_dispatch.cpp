#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kmatch/simd/bit_kernels.hpp"

namespace kmatch::simd {

#ifdef KMATCH_HAVE_AVX2
const BitKernels& avx2_kernel_table();
#endif

const BitKernels* avx2_kernels() {
#if defined(KMATCH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

std::vector<const BitKernels*> available_kernels() {
  std::vector<const BitKernels*> out{&scalar_kernels()};
  if (const BitKernels* k = avx2_kernels()) out.push_back(k);
  return out;
}

namespace {

const BitKernels* pick_default() {
  const char* env = std::getenv("KMATCH_SIMD");
  if (env && std::string_view(env) == "scalar") return &scalar_kernels();
  if (const BitKernels* k = avx2_kernels()) return k;
  return &scalar_kernels();
}

std::atomic<const BitKernels*>& slot() {
  static std::atomic<const BitKernels*> s{pick_default()};
  return s;
}

}  // namespace

const BitKernels& active_kernels() { return *slot().load(std::memory_order_relaxed); }

void set_active_kernels(const BitKernels& k) { slot().store(&k, std::memory_order_relaxed); }

}  // namespace kmatch::simd
