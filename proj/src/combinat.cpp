#include "kmatch/combinat.hpp"

#include <algorithm>
#include <limits>

#include "kmatch/errors.hpp"

namespace kmatch {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (rem != 0) throw InternalError(std::string("inexact division in ") + what);
  return q;
}

void check_parts(std::span<const int> parts) {
  if (parts.empty()) throw DomainError("part structure must have at least one part");
  for (int n : parts)
    if (n < 1) throw DomainError("part sizes must be positive");
}

int min_part(std::span<const int> parts) { return *std::min_element(parts.begin(), parts.end()); }

BigInt falling_raw(long long a, long long b) {
  BigInt out = 1;
  for (long long x = a; x > a - b; --x) out *= x;
  return out;
}

}  // namespace

BigCount::BigCount(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) throw InternalError("negative count");
}

bool BigCount::fits_u64() const { return value_ <= std::numeric_limits<unsigned long long>::max(); }

unsigned long long BigCount::to_u64() const {
  if (!fits_u64()) throw DomainError("count " + str() + " does not fit in 64 bits");
  return value_.convert_to<unsigned long long>();
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.str(); }

BigCount falling(long long a, long long b) {
  if (a < 0 || b < 0) throw DomainError("falling factorial arguments must be non-negative");
  if (b > a) throw DomainError("falling(" + std::to_string(a) + ", " + std::to_string(b) + "): b > a");
  return BigCount(falling_raw(a, b));
}

BigCount factorial(long long n) { return falling(n, n); }

BigCount binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return BigCount(0);
  k = std::min(k, n - k);
  return BigCount(exact_div(falling_raw(n, k), falling_raw(k, k), "binomial"));
}

BigCount count_matchings(std::span<const int> parts, int r) {
  check_parts(parts);
  if (r < 0 || r > min_part(parts))
    throw DomainError("matching size r=" + std::to_string(r) + " out of range for the part structure");
  BigInt num = 1;
  for (int n : parts) num *= falling_raw(n, r);
  return BigCount(exact_div(num, falling_raw(r, r), "count_matchings"));
}

BigCount t_star_size(std::span<const int> parts, int r, int t) {
  check_parts(parts);
  if (t < 0 || t > r) throw DomainError("t-star needs 0 <= t <= r");
  if (r > min_part(parts)) throw DomainError("r exceeds the smallest part");
  BigInt num = 1;
  for (int n : parts) num *= falling_raw(n - t, r - t);
  return BigCount(exact_div(num, falling_raw(r - t, r - t), "t_star_size"));
}

BigCount t_set_star_size(std::span<const int> parts, int r, int t) {
  BigCount star = t_star_size(parts, r, t);
  BigInt mult = 1;
  const BigInt tf = falling_raw(t, t);
  for (std::size_t i = 1; i < parts.size(); ++i) mult *= tf;
  return BigCount(star.value() * mult);
}

BigCount semi_star_size(std::span<const int> parts, int r, int t, int u, bool set_variant) {
  check_parts(parts);
  if (u < t) throw DomainError("semi-star needs u >= t");
  if (t < 0 || u > r) throw DomainError("semi-star needs t <= u <= r");
  if (r > min_part(parts)) throw DomainError("r exceeds the smallest part");
  const std::size_t k = parts.size();
  BigInt num = 1;
  for (std::size_t j = 0; j + 1 < k; ++j) num *= falling_raw(parts[j] - t, r - t);
  num *= falling_raw(parts[k - 1] - u, r - u);
  BigInt out = exact_div(num, falling_raw(r - u, r - u), "semi_star_size");
  if (set_variant) {
    const BigInt tf = falling_raw(t, t);
    for (std::size_t j = 0; j + 1 < k; ++j) out *= tf;
  }
  return BigCount(out);
}

BigCount ak_family_size(int n, int r, int t, int i) {
  if (i < 0 || t < 0 || r < 0) throw DomainError("ak family parameters must be non-negative");
  if (t + 2 * i > n) throw DomainError("ak family needs t + 2i <= n");
  if (r > n) throw DomainError("ak family needs r <= n");
  const int m = t + 2 * i;
  BigInt total = 0;
  for (int j = std::max(t + i, r - (n - m)); j <= std::min(r, m); ++j)
    total += binomial(m, j).value() * binomial(n - m, r - j).value();
  return BigCount(total);
}

BigCount gi_size(int n, int t, int i) {
  if (i < 0 || t < 0) throw DomainError("fixed-point family parameters must be non-negative");
  if (t + 2 * i > n) throw DomainError("fixed-point family needs t + 2i <= n");
  const int m = t + 2 * i;
  BigInt total = 0;
  // Permutations whose fixed points inside [m] are exactly a given s-set.
  for (int s = t + i; s <= m; ++s) {
    BigInt exact = 0;
    for (int j = 0; j <= m - s; ++j) {
      BigInt term = binomial(m - s, j).value() * falling_raw(n - s - j, n - s - j);
      if (j % 2) exact -= term; else exact += term;
    }
    total += binomial(m, s).value() * exact;
  }
  return BigCount(total);
}

std::pair<BigCount, BigCount> katona_sizes(int n, int l) {
  if (n < 0 || l < 0 || l > n) throw DomainError("katona sizes need 0 <= l <= n");
  BigInt at_least = 0;
  for (int i = l; i <= n; ++i) at_least += binomial(n, i).value();
  BigInt punctured = 0;
  for (int i = l; i <= n - 1; ++i) punctured += binomial(n - 1, i).value();
  return {BigCount(at_least), BigCount(2 * punctured)};
}

int conj2_threshold(int n, int r, int t) {
  if (t < 0 || t > r || r > n) throw DomainError("conj2_threshold needs t <= r <= n");
  int best = 0;
  for (int l = 1; l <= (r - t) / 2; ++l) {
    BigInt lhs = 0, rhs = 0;
    for (int i = 0; i <= l; ++i) {
      const BigInt c = binomial(l, i).value();
      const long long a = n - l - t - i;
      BigInt left = c * falling_raw(a, a);
      BigInt right = c * falling_raw(a + 1, a + 1);
      if (i % 2) {
        lhs -= left;
        rhs -= right;
      } else {
        lhs += left;
        rhs += right;
      }
    }
    if ((2 * l + t - 1) * lhs >= l * rhs) best = l;
  }
  return best;
}

}  // namespace kmatch
