#ifndef PERMSTAT_SET_STATS_HPP
#define PERMSTAT_SET_STATS_HPP

#include <compare>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Sorted, duplicate-free sets of positions (subsets of [n-1] or [n])
/// and of values (subsets of [n]). Canonical order keeps joint
/// distribution keys bit-stable.
using PositionSet = std::vector<int>;
using ValueSet = std::vector<int>;

struct Point {
  int pos;
  int value;
  auto operator<=>(const Point&) const = default;
};

/// Sorted by position.
using PointSet = std::vector<Point>;

PositionSet des_set(const Permutation& p);
PositionSet asc_set(const Permutation& p);
ValueSet dtop(const Permutation& p);
ValueSet dbot(const Permutation& p);
ValueSet atop(const Permutation& p);

PointSet lrmax(const Permutation& p);
PointSet rlmin(const Permutation& p);
ValueSet lrmaxl(const Permutation& p);
ValueSet lrminl(const Permutation& p);
ValueSet rlmaxl(const Permutation& p);
ValueSet rlminl(const Permutation& p);

/// Partition of [n] into inverse descent runs: maximal position sets whose
/// values form a descending run of consecutive integers (position of value
/// v precedes the position of v-1). Blocks are ordered by descending value
/// interval, the block of value n first; on 231-avoiding permutations this
/// is the same as ordering decreasingly by largest position.
struct IdrPartition {
  std::vector<PositionSet> blocks;
};

IdrPartition idr_partition(const Permutation& p);

/// Cardinalities |I_1|, ..., |I_k| of the i.d.r. blocks, in block order.
std::vector<int> idr_sizes(const Permutation& p);

/// B nested in A: no element of A lies strictly between two elements of B.
bool is_nested(const PositionSet& inner, const PositionSet& outer);

/// Canonical renderings used verbatim in CLI/JSON output: "{a,b,c}" and
/// "{(i,v),(j,w)}"; "{}" when empty.
std::string render_set(const std::vector<int>& set);
std::string render_points(const PointSet& points);
std::string render_sizes(const std::vector<int>& sizes);

} // namespace permstat

#endif
