#ifndef PERMSTAT_DISTRIBUTIONS_HPP
#define PERMSTAT_DISTRIBUTIONS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permstat/patterns.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// A permutation class to enumerate: all of S_n, the avoiders Av_n(sigma)
/// of a classical pattern, or Av'_n(sigma) (avoiders beginning with n).
struct ClassSpec {
  Permutation pattern;          ///< empty: no avoidance constraint (all of S_n)
  bool first_entry_max = false; ///< restrict to permutations starting with n

  std::string label() const;
  auto operator<=>(const ClassSpec&) const = default;
};

/// Parses "231" -> Av(231), "231'" -> Av'(231), "all" -> S_n.
ClassSpec parse_class(std::string_view text);

/// Enumerates the class members of length n in lexicographic order.
/// Three-letter patterns use prefix-pruned backtracking; other patterns
/// filter S_n. Throws BoundExceededError when n exceeds the safety bound.
void for_each_member(const ClassSpec& cls, int n,
                     const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> class_members(const ClassSpec& cls, int n);
std::uint64_t class_size(const ClassSpec& cls, int n);

/// A statistic value: an integer, or the canonical rendering of a
/// set-valued statistic.
using StatValue = std::variant<long long, std::string>;

std::string to_string(const StatValue& v);

/// A resolved statistic: either a pattern-sum statistic from a registry or
/// a named set-valued statistic (Des, Asc, Dtop, Dbot, Atop, Lrmax, Rlmin,
/// Lrmaxl, Lrminl, Rlmaxl, Rlminl, Dtop-1, IdrSizes).
class Statistic {
public:
  static Statistic from_def(StatisticDef def);
  static Statistic set_valued(std::string name, std::function<std::string(const Permutation&)> fn);

  const std::string& alias() const noexcept { return alias_; }
  const std::string& display() const noexcept { return display_; }
  bool integer_valued() const noexcept { return set_fn_ == nullptr; }

  StatValue operator()(const Permutation& p) const;

private:
  std::string alias_;
  std::string display_;
  std::optional<StatisticDef> def_;
  std::function<std::string(const Permutation&)> set_fn_;
};

/// Resolves a statistic name: registry aliases and display names first
/// (case-sensitive, so "des" is the descent count), then the set-valued
/// names (case-insensitive, so "lrmax" works). Throws UnknownNameError.
Statistic resolve_statistic(std::string_view name,
                            const std::vector<StatisticDef>& reg = registry());

/// Names of the built-in set-valued statistics.
std::vector<std::string> set_statistic_names();

using StatKey = std::vector<StatValue>;

/// Exact joint distribution of one or more statistics over a class.
struct DistributionTable {
  std::vector<std::string> schema;   ///< statistic aliases, in key order
  std::vector<std::string> display;  ///< display names, same order
  int n = 0;
  std::string class_label;
  std::map<StatKey, std::uint64_t> counts;
};

/// Builds the joint distribution table. Workers partition the class by
/// first entry; the merge sums count maps, so the result is identical for
/// any worker count.
DistributionTable distribution(const ClassSpec& cls, int n, std::span<const Statistic> stats,
                               int workers = 1);

/// True iff the two count maps are identical. Throws
/// std::invalid_argument when the key arities differ.
bool equidistributed(const DistributionTable& a, const DistributionTable& b);

std::string to_plain(const DistributionTable& t);
std::string to_csv(const DistributionTable& t);
std::string to_json(const DistributionTable& t);

/// One equidistribution found by the scanner: st1 over Av(sigma) has the
/// same distribution as st2 over Av(tau) for every n <= n_max.
/// Annotations: "primary" (not explained by a symmetry), "diagonal"
/// (literally the same statistic over the same class), or "derived"
/// (obtained from another reported quadruple by applying reverse,
/// complement or reverse-complement to both classes together with a
/// pointwise-verified statistic correspondence; `detail` names it).
struct ScanQuadruple {
  std::string st1, st2;
  std::string sigma, tau;
  std::string annotation;
  std::string detail;
};

struct ScanReport {
  int n_max = 0;
  std::vector<std::string> stats;
  std::vector<std::string> patterns;
  std::vector<ScanQuadruple> quadruples;
};

/// Exhaustive pairwise equidistribution scan over (statistic, class) pairs.
ScanReport scan_quadruples(std::span<const Statistic> stats,
                           const std::vector<Permutation>& patterns, int n_max,
                           int workers = 1);

std::string to_plain(const ScanReport& r);
std::string to_csv(const ScanReport& r);
std::string to_json(const ScanReport& r);

} // namespace permstat

#endif
