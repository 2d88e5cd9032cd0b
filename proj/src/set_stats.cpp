#include "permstat/set_stats.hpp"

#include <algorithm>
#include <sstream>

namespace permstat {

PositionSet des_set(const Permutation& p) {
  PositionSet out;
  for (int i = 1; i < p.size(); ++i)
    if (p[i] > p[i + 1]) out.push_back(i);
  return out;
}

PositionSet asc_set(const Permutation& p) {
  PositionSet out;
  for (int i = 1; i < p.size(); ++i)
    if (p[i] < p[i + 1]) out.push_back(i);
  return out;
}

ValueSet dtop(const Permutation& p) {
  ValueSet out;
  for (int i = 1; i < p.size(); ++i)
    if (p[i] > p[i + 1]) out.push_back(p[i]);
  std::sort(out.begin(), out.end());
  return out;
}

ValueSet dbot(const Permutation& p) {
  ValueSet out;
  for (int i = 1; i < p.size(); ++i)
    if (p[i] > p[i + 1]) out.push_back(p[i + 1]);
  std::sort(out.begin(), out.end());
  return out;
}

ValueSet atop(const Permutation& p) {
  ValueSet out;
  for (int i = 1; i < p.size(); ++i)
    if (p[i] < p[i + 1]) out.push_back(p[i + 1]);
  std::sort(out.begin(), out.end());
  return out;
}

PointSet lrmax(const Permutation& p) {
  PointSet out;
  int best = 0;
  for (int i = 1; i <= p.size(); ++i)
    if (p[i] > best) {
      best = p[i];
      out.push_back({i, best});
    }
  return out;
}

PointSet rlmin(const Permutation& p) {
  PointSet out;
  int best = p.size() + 1;
  for (int i = p.size(); i >= 1; --i)
    if (p[i] < best) {
      best = p[i];
      out.push_back({i, best});
    }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

ValueSet letters_of(const PointSet& points) {
  ValueSet out;
  out.reserve(points.size());
  for (const Point& pt : points) out.push_back(pt.value);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

ValueSet lrmaxl(const Permutation& p) { return letters_of(lrmax(p)); }

ValueSet lrminl(const Permutation& p) {
  ValueSet out;
  int best = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i)
    if (p[i] < best) {
      best = p[i];
      out.push_back(best);
    }
  std::sort(out.begin(), out.end());
  return out;
}

ValueSet rlmaxl(const Permutation& p) {
  ValueSet out;
  int best = 0;
  for (int i = p.size(); i >= 1; --i)
    if (p[i] > best) {
      best = p[i];
      out.push_back(best);
    }
  std::sort(out.begin(), out.end());
  return out;
}

ValueSet rlminl(const Permutation& p) { return letters_of(rlmin(p)); }

IdrPartition idr_partition(const Permutation& p) {
  const int n = p.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(p[i])] = i;
  // A run is a maximal value interval v, v-1, ..., u whose positions
  // increase as the value decreases. Blocks are emitted by descending value
  // interval; on 231-avoiders this coincides with ordering by largest
  // position.
  IdrPartition part;
  int v = n;
  while (v >= 1) {
    int u = v;
    while (u > 1 && pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(u) - 1]) --u;
    PositionSet block;
    block.reserve(static_cast<std::size_t>(v - u + 1));
    for (int w = v; w >= u; --w) block.push_back(pos[static_cast<std::size_t>(w)]);
    part.blocks.push_back(std::move(block));
    v = u - 1;
  }
  return part;
}

std::vector<int> idr_sizes(const Permutation& p) {
  std::vector<int> sizes;
  for (const PositionSet& block : idr_partition(p).blocks)
    sizes.push_back(static_cast<int>(block.size()));
  return sizes;
}

bool is_nested(const PositionSet& inner, const PositionSet& outer) {
  if (inner.size() < 2) return true;
  const int lo = inner.front(), hi = inner.back();
  for (int a : outer)
    if (lo < a && a < hi) return false;
  return true;
}

std::string render_set(const std::vector<int>& set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) os << ',';
    os << set[i];
  }
  os << '}';
  return os.str();
}

std::string render_points(const PointSet& points) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) os << ',';
    os << '(' << points[i].pos << ',' << points[i].value << ')';
  }
  os << '}';
  return os.str();
}

std::string render_sizes(const std::vector<int>& sizes) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) os << ',';
    os << sizes[i];
  }
  os << ')';
  return os.str();
}

} // namespace permstat
