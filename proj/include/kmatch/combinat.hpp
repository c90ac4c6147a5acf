#pragma once

// Exact counting formulas for matching families. Everything here is integer
// arithmetic on arbitrary-precision values.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kmatch {

using BigInt = boost::multiprecision::cpp_int;

/// Non-negative arbitrary-precision count.
class BigCount {
 public:
  BigCount() = default;
  BigCount(unsigned long long v) : value_(v) {}  // NOLINT: implicit by design of a numeric type
  explicit BigCount(BigInt v);

  const BigInt& value() const noexcept { return value_; }
  std::string str() const { return value_.str(); }
  /// Throws DomainError when the value does not fit.
  unsigned long long to_u64() const;
  bool fits_u64() const;

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }
  friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
  friend auto operator<=>(const BigCount& a, const BigCount& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : a.value_ > b.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  BigInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

/// (a)_b = a (a-1) ... (a-b+1); 1 when b == 0.
BigCount falling(long long a, long long b);
BigCount factorial(long long n);
BigCount binomial(long long n, long long k);  // 0 outside 0 <= k <= n

/// Number of r-edge matchings of the complete k-partite k-graph with the given
/// part sizes: prod_i (n_i)_r / r!.
BigCount count_matchings(std::span<const int> parts, int r);

/// Size of a t-star: prod_i (n_i - t)_{r-t} / (r-t)!.
BigCount t_star_size(std::span<const int> parts, int r, int t);

/// Size of a t-set-star: (t!)^{k-1} * t_star_size.
BigCount t_set_star_size(std::span<const int> parts, int r, int t);

/// Size of the maximal family whose projections onto the last part contain
/// per-pair centres whose last-part shadows cover u vertices:
/// prod_{j<k} (n_j - t)_{r-t} * (n_k - u)_{r-u} / (r-u)!, times (t!)^{k-1}
/// for the box variant.
BigCount semi_star_size(std::span<const int> parts, int r, int t, int u, bool set_variant);

/// |{F in C([n], r) : |F cap [t+2i]| >= t+i}|.
BigCount ak_family_size(int n, int r, int t, int i);

/// Permutations of [n] with at least t+i fixed points inside [t+2i], by
/// inclusion-exclusion over the exact fixed set.
BigCount gi_size(int n, int t, int i);

/// (|{A : |A| >= l}|, |{A : |A - {x}| >= l}|) over subsets of [n].
std::pair<BigCount, BigCount> katona_sizes(int n, int l);

/// Largest l in 1..floor((r-t)/2) with
///   (2l+t-1) sum_i (-1)^i C(l,i) (n-l-t-i)!  >=  l sum_i (-1)^i C(l,i) (n-l-t+1-i)!
/// or 0 when no l qualifies.
int conj2_threshold(int n, int r, int t);

}  // namespace kmatch
