#include <random>

#include "doctest.h"
#include "kmatch/bitset.hpp"
#include "kmatch/simd/bit_kernels.hpp"

using namespace kmatch;
using simd::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> v(n);
  for (auto& w : v) {
    w = rng();
    if (density == 0) w &= rng() & rng();  // sparse
    if (density == 2) w |= rng() | rng();  // dense
  }
  return v;
}

}  // namespace

TEST_CASE("scalar kernels are always available and listed first") {
  const auto all = simd::available_kernels();
  REQUIRE(!all.empty());
  CHECK(all.front() == &simd::scalar_kernels());
  CHECK(simd::scalar_kernels().name == "scalar");
}

TEST_CASE("every kernel variant matches the scalar reference") {
  const simd::BitKernels& ref = simd::scalar_kernels();
  std::mt19937_64 rng(20261019);
  for (const simd::BitKernels* k : simd::available_kernels()) {
    CAPTURE(k->name);
    for (std::size_t n = 0; n <= 70; ++n)
      for (std::size_t offset : {0u, 1u, 3u})
        for (int density : {0, 1, 2}) {
          CAPTURE(n);
          CAPTURE(offset);
          // Offsets move the start off any vector alignment.
          std::vector<Word> a = random_words(rng, n + offset, density);
          std::vector<Word> b = random_words(rng, n + offset, density);
          const Word* pa = a.data() + offset;
          const Word* pb = b.data() + offset;

          CHECK(k->popcount(pa, n) == ref.popcount(pa, n));
          CHECK(k->and_popcount(pa, pb, n) == ref.and_popcount(pa, pb, n));
          CHECK(k->any(pa, n) == ref.any(pa, n));

          std::vector<Word> d1(n + offset, 0x5555), d2(n + offset, 0x5555);
          k->and_into(d1.data() + offset, pa, pb, n);
          ref.and_into(d2.data() + offset, pa, pb, n);
          CHECK(d1 == d2);
          k->andnot_into(d1.data() + offset, pa, pb, n);
          ref.andnot_into(d2.data() + offset, pa, pb, n);
          CHECK(d1 == d2);

          // In place, as Bitset::subtract uses it.
          std::vector<Word> i1(pa, pa + n), i2(pa, pa + n);
          k->andnot_into(i1.data(), i1.data(), pb, n);
          ref.andnot_into(i2.data(), i2.data(), pb, n);
          CHECK(i1 == i2);
        }
  }
}

TEST_CASE("any detects a single bit anywhere") {
  for (const simd::BitKernels* k : simd::available_kernels())
    for (std::size_t n = 1; n <= 40; ++n)
      for (std::size_t pos = 0; pos < n; ++pos) {
        std::vector<Word> v(n, 0);
        CHECK_FALSE(k->any(v.data(), n));
        v[pos] = Word{1} << (pos % 64);
        CHECK(k->any(v.data(), n));
        CHECK(k->popcount(v.data(), n) == 1);
      }
}

TEST_CASE("bitset basics") {
  Bitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.first() == 0);
  CHECK(b.next(1) == 64);
  CHECK(b.next(65) == 129);
  CHECK(b.next(130) == Bitset::npos);
  CHECK(b.indices() == std::vector<std::size_t>{0, 64, 129});
  b.reset_through(64);
  CHECK(b.indices() == std::vector<std::size_t>{129});
  b.set_all();
  CHECK(b.count() == 130);
  b.reset_through(63);
  CHECK(b.count() == 66);

  Bitset a(130), c(130);
  a.set(5);
  a.set(100);
  c.set(100);
  c.set(7);
  CHECK(a.and_count(c) == 1);
  Bitset x(130);
  x.assign_and(a, c);
  CHECK(x.indices() == std::vector<std::size_t>{100});
  a.subtract(c);
  CHECK(a.indices() == std::vector<std::size_t>{5});
}

TEST_CASE("active kernels can be switched") {
  const simd::BitKernels& before = simd::active_kernels();
  simd::set_active_kernels(simd::scalar_kernels());
  CHECK(simd::active_kernels().name == "scalar");
  simd::set_active_kernels(before);
  CHECK(&simd::active_kernels() == &before);
}
