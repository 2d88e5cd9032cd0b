#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "permstat/patterns.hpp"
#include "permstat/set_stats.hpp"

using namespace permstat;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

// position intervals whose values form maximal decreasing factors
std::vector<std::vector<int>> descent_runs(const Permutation& p) {
  std::vector<std::vector<int>> runs;
  int i = 1;
  while (i <= p.size()) {
    std::vector<int> run{i};
    while (i < p.size() && p[i] > p[i + 1]) run.push_back(++i);
    runs.push_back(run);
    ++i;
  }
  return runs;
}

} // namespace

TEST_CASE("descent and ascent machinery on the worked examples") {
  CHECK(asc_set(P("7653124")) == PositionSet{5, 6});
  CHECK(atop(P("7163254")) == ValueSet{5, 6});
  CHECK(des_set(P("4675321")) == PositionSet{3, 4, 5, 6});
  CHECK(des_set(P("361524")) == PositionSet{2, 4});
  CHECK(dbot(P("7163254")) == ValueSet{1, 2, 3, 4});
  CHECK(dtop(P("4365271")) == ValueSet{4, 5, 6, 7});
  CHECK(des_set(Permutation()).empty());
  CHECK(asc_set(P("1")).empty());
}

TEST_CASE("Des and Asc partition [n-1]; Dbot complements Atop when p starts with n") {
  for (int n = 0; n <= 7; ++n)
    for (const Permutation& p : oracles::all_perms(n)) {
      PositionSet des = des_set(p), asc = asc_set(p), all;
      std::merge(des.begin(), des.end(), asc.begin(), asc.end(), std::back_inserter(all));
      PositionSet expect;
      for (int i = 1; i < n; ++i) expect.push_back(i);
      CHECK(all == expect);
      if (n >= 1 && p[1] == n) {
        ValueSet bot = dbot(p), top = atop(p), both;
        std::merge(bot.begin(), bot.end(), top.begin(), top.end(), std::back_inserter(both));
        CHECK(both == expect);
      }
    }
}

TEST_CASE("extrema on the worked examples") {
  CHECK(lrmax(P("321654")) == PointSet{{1, 3}, {4, 6}});
  CHECK(lrmax(P("32658741")) == PointSet{{1, 3}, {3, 6}, {5, 8}});
  CHECK(lrmaxl(Permutation::identity(5)) == ValueSet{1, 2, 3, 4, 5});
  CHECK(rlmin(P("361524")) == PointSet{{3, 1}, {5, 2}, {6, 4}});
  CHECK(lrminl(P("361524")) == ValueSet{1, 3});
  CHECK(rlmaxl(P("361524")) == ValueSet{4, 5, 6});
  CHECK(rlminl(P("361524")) == ValueSet{1, 2, 4});
  CHECK(lrmax(Permutation()).empty());
}

TEST_CASE("i.d.r. partitions from the worked examples") {
  IdrPartition a = idr_partition(P("7615324"));
  REQUIRE(a.blocks.size() == 3);
  CHECK(a.blocks[0] == PositionSet{1, 2, 4, 7});
  CHECK(a.blocks[1] == PositionSet{5, 6});
  CHECK(a.blocks[2] == PositionSet{3});

  IdrPartition b = idr_partition(P("7132654"));
  REQUIRE(b.blocks.size() == 3);
  CHECK(b.blocks[0] == PositionSet{1, 5, 6, 7});
  CHECK(b.blocks[1] == PositionSet{3, 4});
  CHECK(b.blocks[2] == PositionSet{2});

  IdrPartition c = idr_partition(P("7653124"));
  REQUIRE(c.blocks.size() == 3);
  CHECK(c.blocks[0] == PositionSet{1, 2, 3, 7});
  CHECK(c.blocks[1] == PositionSet{4, 6});
  CHECK(c.blocks[2] == PositionSet{5});

  CHECK(idr_partition(Permutation::decreasing(6)).blocks ==
        std::vector<PositionSet>{{1, 2, 3, 4, 5, 6}});
  CHECK(idr_partition(Permutation()).blocks.empty());
  CHECK(idr_sizes(P("7653124")) == std::vector<int>{4, 2, 1});
}

TEST_CASE("i.d.r. invariants, exhaustive n <= 7") {
  for (int n = 0; n <= 7; ++n)
    for (const Permutation& p : oracles::all_perms(n)) {
      IdrPartition part = idr_partition(p);
      // blocks partition [n]
      std::vector<int> all;
      for (const PositionSet& block : part.blocks) {
        CHECK(std::is_sorted(block.begin(), block.end()));
        all.insert(all.end(), block.begin(), block.end());
      }
      std::sort(all.begin(), all.end());
      PositionSet expect;
      for (int i = 1; i <= n; ++i) expect.push_back(i);
      CHECK(all == expect);
      // ordering by descending value interval
      for (std::size_t l = 1; l < part.blocks.size(); ++l)
        CHECK(p[part.blocks[l - 1].back()] > p[part.blocks[l].front()]);
      // on 231-avoiders the same order sorts largest positions decreasingly
      if (!contains(P("231"), p))
        for (std::size_t l = 1; l < part.blocks.size(); ++l)
          CHECK(part.blocks[l - 1].back() > part.blocks[l].back());
      // value-interval property along each block
      for (const PositionSet& block : part.blocks)
        for (std::size_t i = 1; i < block.size(); ++i)
          CHECK(p[block[i - 1]] == p[block[i]] + 1);
      // blocks are the descent runs of the group inverse, positions and
      // values exchanged
      std::vector<std::vector<int>> inv_runs = descent_runs(group_inverse(p));
      std::vector<std::vector<int>> block_values;
      for (const PositionSet& block : part.blocks) {
        std::vector<int> vals;
        for (int i : block) vals.push_back(p[i]);
        std::sort(vals.begin(), vals.end());
        block_values.push_back(vals);
      }
      std::sort(block_values.begin(), block_values.end());
      std::sort(inv_runs.begin(), inv_runs.end());
      CHECK(block_values == inv_runs);
    }
}

TEST_CASE("nestedness") {
  CHECK(is_nested({5, 6}, {1, 2, 4, 7}));
  CHECK(!is_nested({1, 3}, {2, 5}));
  CHECK(is_nested({4}, {1, 2, 3, 9}));
  CHECK(is_nested({}, {1, 2}));
}

TEST_CASE("231-avoidance is equivalent to pairwise nested i.d.r.'s, n <= 8") {
  const Permutation s231 = P("231");
  for (int n = 1; n <= 8; ++n)
    for (const Permutation& p : oracles::all_perms(n)) {
      const auto blocks = idr_partition(p).blocks;
      bool nested = true;
      for (std::size_t a = 0; a < blocks.size() && nested; ++a)
        for (std::size_t b = a + 1; b < blocks.size() && nested; ++b)
          nested = is_nested(blocks[b], blocks[a]);
      CHECK(nested == !contains(s231, p));
    }
}

TEST_CASE("for 231-avoiders, I_1 holds the right-to-left maxima and the block maxima are the "
          "right-to-left minima, n <= 8") {
  const Permutation s231 = P("231");
  for (int n = 1; n <= 8; ++n)
    for (const Permutation& p : oracles::all_perms(n)) {
      if (contains(s231, p)) continue;
      const auto blocks = idr_partition(p).blocks;
      PositionSet rlmax_pos;
      int best = 0;
      for (int i = n; i >= 1; --i)
        if (p[i] > best) {
          best = p[i];
          rlmax_pos.push_back(i);
        }
      std::sort(rlmax_pos.begin(), rlmax_pos.end());
      CHECK(blocks[0] == rlmax_pos);
      PositionSet block_maxima;
      for (const PositionSet& block : blocks) block_maxima.push_back(block.back());
      std::sort(block_maxima.begin(), block_maxima.end());
      PositionSet rlmin_pos;
      for (const Point& pt : rlmin(p)) rlmin_pos.push_back(pt.pos);
      CHECK(block_maxima == rlmin_pos);
    }
}

TEST_CASE("canonical renderings") {
  CHECK(render_set({1, 2, 3}) == "{1,2,3}");
  CHECK(render_set({}) == "{}");
  CHECK(render_points({{1, 3}, {4, 6}}) == "{(1,3),(4,6)}");
  CHECK(render_points({}) == "{}");
  CHECK(render_sizes({4, 2, 1}) == "(4,2,1)");
}
