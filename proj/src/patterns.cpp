#include "permstat/patterns.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permstat/errors.hpp"

namespace permstat {

VincularPattern::VincularPattern(Permutation letters, std::uint32_t adjacency)
    : letters_(std::move(letters)), adjacency_(adjacency) {
  if (letters_.empty()) throw std::invalid_argument("vincular pattern must be non-empty");
  const int k = letters_.size();
  if (k >= 32 || (adjacency_ >> (k - 1)) != 0)
    throw std::invalid_argument("adjacency constraints out of range for pattern length");
}

VincularPattern parse_vincular(std::string_view text) {
  std::vector<int> letters;
  std::uint32_t adjacency = 0;
  bool in_block = false;
  int block_len = 0;
  for (char c : text) {
    if (c == '[') {
      if (in_block) throw ParseError("nested '[' in vincular pattern");
      in_block = true;
      block_len = 0;
    } else if (c == ']') {
      if (!in_block) throw ParseError("unmatched ']' in vincular pattern");
      if (block_len < 2) throw ParseError("adjacency block needs at least two letters");
      in_block = false;
    } else if (c >= '1' && c <= '9') {
      if (in_block && block_len > 0)
        adjacency |= 1u << (letters.size() - 1);
      letters.push_back(c - '0');
      ++block_len;
    } else {
      throw ParseError("invalid character in vincular pattern");
    }
  }
  if (in_block) throw ParseError("unterminated '[' in vincular pattern");
  if (letters.empty()) throw ParseError("empty vincular pattern");
  try {
    return VincularPattern(Permutation(std::move(letters)), adjacency);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid vincular pattern: ") + e.what());
  }
}

std::string to_string(const VincularPattern& pat) {
  std::ostringstream os;
  const int k = pat.length();
  int i = 1;
  while (i <= k) {
    int run_end = i;
    while (run_end < k && pat.adjacent_at(run_end)) ++run_end;
    if (run_end > i) os << '[';
    for (int j = i; j <= run_end; ++j) os << pat.letters()[j];
    if (run_end > i) os << ']';
    i = run_end + 1;
  }
  return os.str();
}

namespace {

// Rank of sigma's third role decides the value interval for the free letter
// once the two anchored values are known: rank 1 -> below both, rank 3 ->
// above both, rank 2 -> strictly between.
bool value_fits(int w, int rank, int u, int v) {
  const int lo = std::min(u, v), hi = std::max(u, v);
  if (rank == 1) return w < lo;
  if (rank == 3) return w > hi;
  return lo < w && w < hi;
}

long long count_len2(const VincularPattern& pat, const Permutation& host) {
  const int n = host.size();
  const bool ascending = pat.letters()[1] < pat.letters()[2];
  long long count = 0;
  if (pat.adjacent_at(1)) {
    for (int i = 1; i < n; ++i)
      if ((host[i] < host[i + 1]) == ascending) ++count;
  } else {
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if ((host[i] < host[j]) == ascending) ++count;
  }
  return count;
}

long long count_len3(const VincularPattern& pat, const Permutation& host) {
  const int n = host.size();
  const int s1 = pat.letters()[1], s2 = pat.letters()[2], s3 = pat.letters()[3];
  long long count = 0;
  const bool adj12 = pat.adjacent_at(1), adj23 = pat.adjacent_at(2);
  if (adj12 && adj23) {
    for (int i = 1; i + 2 <= n; ++i) {
      const int a = host[i], b = host[i + 1], c = host[i + 2];
      if ((a < b) == (s1 < s2) && (b < c) == (s2 < s3) && (a < c) == (s1 < s3)) ++count;
    }
  } else if (adj12) {
    for (int i = 1; i + 1 <= n; ++i) {
      const int u = host[i], v = host[i + 1];
      if ((u < v) != (s1 < s2)) continue;
      for (int j = i + 2; j <= n; ++j)
        if (value_fits(host[j], s3, u, v)) ++count;
    }
  } else if (adj23) {
    for (int j = 2; j + 1 <= n; ++j) {
      const int u = host[j], v = host[j + 1];
      if ((u < v) != (s2 < s3)) continue;
      for (int i = 1; i < j; ++i)
        if (value_fits(host[i], s1, u, v)) ++count;
    }
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if ((host[i] < host[j]) != (s1 < s2)) continue;
        for (int l = j + 1; l <= n; ++l)
          if (value_fits(host[l], s3, host[i], host[j])) ++count;
      }
  }
  return count;
}

long long count_generic(const VincularPattern& pat, const Permutation& host, int depth,
                        std::vector<int>& chosen) {
  const int k = pat.length(), n = host.size();
  if (depth == k) return 1;
  long long count = 0;
  const int first = depth == 0 ? 1 : chosen.back() + 1;
  const int last = depth > 0 && pat.adjacent_at(depth) ? first : n - (k - depth - 1);
  for (int pos = first; pos <= last; ++pos) {
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d)
      ok = (host[chosen[static_cast<std::size_t>(d)]] < host[pos]) ==
           (pat.letters()[d + 1] < pat.letters()[depth + 1]);
    if (!ok) continue;
    chosen.push_back(pos);
    count += count_generic(pat, host, depth + 1, chosen);
    chosen.pop_back();
  }
  return count;
}

} // namespace

long long count_occurrences(const VincularPattern& pat, const Permutation& host) {
  const int k = pat.length(), n = host.size();
  if (k > n) return 0;
  if (k == 1) return n;
  if (k == 2) return count_len2(pat, host);
  if (k == 3) return count_len3(pat, host);
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  return count_generic(pat, host, 0, chosen);
}

namespace {

bool contains_from(const Permutation& pattern, const Permutation& host, int depth,
                   std::vector<int>& chosen) {
  const int k = pattern.size(), n = host.size();
  if (depth == k) return true;
  const int first = depth == 0 ? 1 : chosen.back() + 1;
  for (int pos = first; pos <= n - (k - depth - 1); ++pos) {
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d)
      ok = (host[chosen[static_cast<std::size_t>(d)]] < host[pos]) ==
           (pattern[d + 1] < pattern[depth + 1]);
    if (!ok) continue;
    chosen.push_back(pos);
    if (contains_from(pattern, host, depth + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

bool contains(const Permutation& pattern, const Permutation& host) {
  if (pattern.empty()) throw std::invalid_argument("containment pattern must be non-empty");
  if (pattern.size() > host.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(pattern.size()));
  return contains_from(pattern, host, 0, chosen);
}

long long evaluate(const StatisticDef& stat, const Permutation& p) {
  long long total = 0;
  for (const VincularPattern& term : stat.terms) total += count_occurrences(term, p);
  return total;
}

namespace {

StatisticDef make_stat(std::string name, std::string alias,
                       std::initializer_list<const char*> term_texts) {
  StatisticDef def{std::move(name), std::move(alias), {}};
  for (const char* t : term_texts) def.terms.push_back(parse_vincular(t));
  return def;
}

} // namespace

const std::vector<StatisticDef>& registry() {
  static const std::vector<StatisticDef> reg = {
      make_stat("inv", "inv", {"[23]1", "[31]2", "[32]1", "[21]"}),
      make_stat("maj", "maj", {"1[32]", "2[31]", "3[21]", "[21]"}),
      make_stat("mad", "mad", {"2[31]", "2[31]", "[31]2", "[21]"}),
      make_stat("mak", "mak", {"1[32]", "[31]2", "[32]1", "[21]"}),
      make_stat("makl", "makl", {"1[32]", "2[31]", "[32]1", "[21]"}),
      make_stat("bast", "bast", {"[13]2", "[21]3", "[32]1", "[21]"}),
      make_stat("bast'", "bast1", {"[13]2", "[31]2", "[32]1", "[21]"}),
      make_stat("bast''", "bast2", {"1[32]", "3[12]", "3[21]", "[21]"}),
      make_stat("foze", "foze", {"[21]3", "3[21]", "[13]2", "[21]"}),
      make_stat("foze'", "foze1", {"1[32]", "2[31]", "2[31]", "[21]"}),
      make_stat("foze''", "foze2", {"[23]1", "[31]2", "[31]2", "[21]"}),
      make_stat("sist", "sist", {"[13]2", "[13]2", "2[13]", "[21]"}),
      make_stat("sist'", "sist1", {"[13]2", "[13]2", "2[31]", "[21]"}),
      make_stat("sist''", "sist2", {"[13]2", "2[31]", "2[31]", "[21]"}),
      make_stat("des", "des", {"[21]"}),
  };
  return reg;
}

const StatisticDef* find_statistic(std::string_view name, const std::vector<StatisticDef>& reg) {
  for (const StatisticDef& def : reg)
    if (def.alias == name || def.name == name) return &def;
  return nullptr;
}

} // namespace permstat
