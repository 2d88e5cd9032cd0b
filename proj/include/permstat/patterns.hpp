#ifndef PERMSTAT_PATTERNS_HPP
#define PERMSTAT_PATTERNS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// A vincular (generalized) pattern: a pattern permutation together with
/// adjacency constraints. Bit i-1 of `adjacency` set means pattern letters
/// i and i+1 must occupy adjacent positions in the host. An empty adjacency
/// set gives a classical pattern.
///
/// Text form: digits with bracketed adjacent blocks, e.g. "[31]2", "1[32]",
/// "[21]". Parser and printer round-trip.
class VincularPattern {
public:
  VincularPattern(Permutation letters, std::uint32_t adjacency);

  const Permutation& letters() const noexcept { return letters_; }
  int length() const noexcept { return letters_.size(); }
  std::uint32_t adjacency() const noexcept { return adjacency_; }

  /// True when pattern letters i and i+1 (1 <= i < length) must be adjacent.
  bool adjacent_at(int i) const { return (adjacency_ >> (i - 1)) & 1u; }

  auto operator<=>(const VincularPattern&) const = default;

private:
  Permutation letters_;
  std::uint32_t adjacency_ = 0;
};

VincularPattern parse_vincular(std::string_view text);
std::string to_string(const VincularPattern& pat);

/// Number of index tuples i_1 < ... < i_k order-isomorphic to the pattern,
/// with i_{j+1} = i_j + 1 wherever the pattern demands adjacency.
/// Patterns of length 2 and 3 (every statistic in the registry) go through
/// scans anchored on the underlined pair, O(n^2) worst case; longer patterns
/// fall back to tuple enumeration.
long long count_occurrences(const VincularPattern& pat, const Permutation& host);

/// Classical containment: true iff host has a subsequence order-isomorphic
/// to the (non-empty) pattern.
bool contains(const Permutation& pattern, const Permutation& host);

inline bool avoids(const Permutation& pattern, const Permutation& host) {
  return !contains(pattern, host);
}

/// A named statistic given as a formal sum of vincular patterns. Repeated
/// terms are kept with multiplicity; the value on a permutation is the sum
/// of the occurrence counts of all terms.
struct StatisticDef {
  std::string name;   ///< display name, e.g. "foze''"
  std::string alias;  ///< shell-safe name, e.g. "foze2"
  std::vector<VincularPattern> terms;
};

long long evaluate(const StatisticDef& stat, const Permutation& p);

/// The registry of pattern-sum statistics: inv, maj, the twelve
/// Babson-Steingrimsson style statistics mad, mak, makl, bast, bast',
/// bast'', foze, foze', foze'', sist, sist', sist'', and des. Term lists
/// are data (built from their text form), so they can be printed and
/// diffed; duplicated terms are preserved.
const std::vector<StatisticDef>& registry();

/// Looks a statistic up by alias or display name; nullptr when absent.
const StatisticDef* find_statistic(std::string_view name,
                                   const std::vector<StatisticDef>& reg = registry());

} // namespace permstat

#endif
