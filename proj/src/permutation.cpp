#include "permstat/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

bool is_rearrangement(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : v) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x) - 1]) return false;
    seen[static_cast<std::size_t>(x) - 1] = true;
  }
  return true;
}

} // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  if (!is_rearrangement(values_))
    throw std::invalid_argument("permutation values must be a rearrangement of 1..n");
}

Permutation unchecked_permutation(std::vector<int> one_line) {
  assert(is_rearrangement(one_line));
  return Permutation(std::move(one_line), Permutation::unchecked_tag{});
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return unchecked_permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return unchecked_permutation(std::move(v));
}

int Permutation::position_of(int value) const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)[i] == value) return i;
  throw std::out_of_range("value not present in permutation");
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return unchecked_permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int x : p.values()) v.push_back(n - x + 1);
  return unchecked_permutation(std::move(v));
}

Permutation group_inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(p[i]) - 1] = i;
  return unchecked_permutation(std::move(v));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int x : a.values()) v.push_back(x);
  for (int x : b.values()) v.push_back(x + a.size());
  return unchecked_permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int x : a.values()) v.push_back(x + b.size());
  for (int x : b.values()) v.push_back(x);
  return unchecked_permutation(std::move(v));
}

SkewDirectParts decompose_231(const Permutation& p) {
  if (p.empty()) throw PreconditionError("decompose_231: empty permutation");
  const int n = p.size();
  const int head = p[1];
  // alpha occupies positions 2..head and must hold exactly the values
  // 1..head-1; beta occupies the rest, shifted down by head.
  std::vector<int> alpha_vals, beta_vals;
  alpha_vals.reserve(static_cast<std::size_t>(head - 1));
  beta_vals.reserve(static_cast<std::size_t>(n - head));
  for (int i = 2; i <= head; ++i) {
    if (p[i] >= head)
      throw PreconditionError("decompose_231: input contains 231");
    alpha_vals.push_back(p[i]);
  }
  for (int i = head + 1; i <= n; ++i) {
    if (p[i] <= head)
      throw PreconditionError("decompose_231: input contains 231");
    beta_vals.push_back(p[i] - head);
  }
  SkewDirectParts parts{unchecked_permutation(std::move(alpha_vals)),
                        unchecked_permutation(std::move(beta_vals))};
  assert(direct_sum(skew_sum(Permutation::identity(1), parts.alpha), parts.beta) == p);
  return parts;
}

Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Permutation();

  std::vector<int> vals;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string_view token =
          trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (token.empty()) throw ParseError("empty entry in permutation text");
      int value = 0;
      for (char c : token) {
        if (c < '0' || c > '9') throw ParseError("invalid character in permutation text");
        value = value * 10 + (c - '0');
        if (value > 1000) throw ParseError("permutation value out of range");
      }
      vals.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    // compact digit form, limited to n <= 9
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("invalid character in compact permutation text");
      vals.push_back(c - '0');
    }
    if (vals.size() > 9) throw ParseError("compact permutation text is limited to n <= 9");
  }
  try {
    return Permutation(std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("not a permutation of 1..n: ") + e.what());
  }
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  if (p.size() <= 9) {
    for (int x : p.values()) os << x;
  } else {
    bool first = true;
    for (int x : p.values()) {
      if (!first) os << ',';
      os << x;
      first = false;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

} // namespace permstat
