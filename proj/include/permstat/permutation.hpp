#ifndef PERMSTAT_PERMUTATION_HPP
#define PERMSTAT_PERMUTATION_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// A permutation in one-line notation. Values are 1-based: a permutation of
/// length n is a rearrangement of 1..n. The empty permutation (n = 0) is a
/// valid value and is the unit of the direct sum.
///
/// Construction validates the rearrangement property eagerly; every
/// algorithm in the library relies on it.
class Permutation {
public:
  Permutation() = default;

  /// One-line notation; throws std::invalid_argument unless `one_line`
  /// is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at 1-based position `pos`.
  int operator[](int pos) const { return values_[static_cast<std::size_t>(pos) - 1]; }

  /// 1-based position of `value`.
  int position_of(int value) const;

  /// The underlying one-line word (index 0 holds position 1).
  const std::vector<int>& values() const noexcept { return values_; }

  auto operator<=>(const Permutation&) const = default;

private:
  struct unchecked_tag {};
  Permutation(std::vector<int> one_line, unchecked_tag) : values_(std::move(one_line)) {}

  std::vector<int> values_;

  friend Permutation unchecked_permutation(std::vector<int>);
};

/// Internal fast path for algorithms that construct valid output by
/// design; skips the rearrangement check.
Permutation unchecked_permutation(std::vector<int> one_line);

/// r(p): positional reversal. Involution.
Permutation reverse(const Permutation& p);

/// c(p): value complement i -> n - i + 1. Involution.
Permutation complement(const Permutation& p);

/// Group-theoretical inverse: result[p[i]] = i.
Permutation group_inverse(const Permutation& p);

/// Direct sum: b placed after and above a.
Permutation direct_sum(const Permutation& a, const Permutation& b);

/// Skew sum: a placed before and above b.
Permutation skew_sum(const Permutation& a, const Permutation& b);

struct SkewDirectParts {
  Permutation alpha;
  Permutation beta;
};

/// Splits a non-empty 231-avoiding permutation as (1 skew alpha) direct beta,
/// with |alpha| = p[1] - 1. The split is positional: it does not test
/// 231-avoidance up front, but throws PreconditionError when the slices are
/// not themselves permutations (which is exactly when reconstruction would
/// fail). Throws PreconditionError on empty input.
SkewDirectParts decompose_231(const Permutation& p);

/// Parses the textual formats: comma-separated 1-based values
/// ("3,2,1,6,5,4"), or a compact digit string ("321654") when n <= 9.
/// The empty string denotes the empty permutation. Throws ParseError.
Permutation parse_permutation(std::string_view text);

/// Compact digits when n <= 9, comma-separated otherwise; "" for n = 0.
std::string to_string(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

} // namespace permstat

#endif
