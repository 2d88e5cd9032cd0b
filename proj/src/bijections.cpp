#include "permstat/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "permstat/errors.hpp"
#include "permstat/patterns.hpp"
#include "permstat/set_stats.hpp"

namespace permstat {

namespace {

const Permutation& pat_231() {
  static const Permutation p({2, 3, 1});
  return p;
}
const Permutation& pat_312() {
  static const Permutation p({3, 1, 2});
  return p;
}
const Permutation& pat_321() {
  static const Permutation p({3, 2, 1});
  return p;
}

// Bijections check their avoidance precondition once at the public entry;
// the recursion below works on trusted input.
void require_avoids(const Permutation& p, const Permutation& pattern, const char* who) {
  if (contains(pattern, p))
    throw PreconditionError(std::string(who) + ": input contains " + to_string(pattern));
}

const Permutation& singleton() {
  static const Permutation p({1});
  return p;
}

Permutation phi_rec(const Permutation& p) {
  if (p.empty()) return p;
  auto [alpha, beta] = decompose_231(p);
  if (alpha.empty()) return direct_sum(singleton(), phi_rec(beta));
  // p = (1 skew alpha) direct beta with alpha non-empty. Write
  // phi(alpha) = (1 skew gamma) direct delta and swap the two parts inside
  // the skew block.
  auto [gamma, delta] = decompose_231(phi_rec(alpha));
  Permutation block = skew_sum(singleton(), direct_sum(skew_sum(singleton(), delta), gamma));
  return direct_sum(block, phi_rec(beta));
}

Permutation phi_inv_rec(const Permutation& t) {
  if (t.empty()) return t;
  auto [inner, beta] = decompose_231(t);
  if (inner.empty()) return direct_sum(singleton(), phi_inv_rec(beta));
  // inner = (1 skew delta) direct gamma; alpha is the preimage of
  // (1 skew gamma) direct delta.
  auto [delta, gamma] = decompose_231(inner);
  Permutation alpha = phi_inv_rec(direct_sum(skew_sum(singleton(), gamma), delta));
  return direct_sum(skew_sum(singleton(), alpha), phi_inv_rec(beta));
}

} // namespace

Permutation phi(const Permutation& p) {
  require_avoids(p, pat_231(), "phi");
  return phi_rec(p);
}

Permutation phi_inverse(const Permutation& p) {
  require_avoids(p, pat_231(), "phi_inverse");
  return phi_inv_rec(p);
}

Permutation psi(const Permutation& p) {
  require_avoids(p, pat_312(), "psi");
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  std::vector<int> rest;
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (p[i] > best) {
      best = p[i];
      out[static_cast<std::size_t>(i) - 1] = p[i];
    } else {
      rest.push_back(p[i]);
    }
  }
  std::sort(rest.begin(), rest.end());
  std::size_t next = 0;
  for (int& slot : out)
    if (slot == 0) slot = rest[next++];
  return unchecked_permutation(std::move(out));
}

Permutation psi_inverse(const Permutation& p) {
  require_avoids(p, pat_321(), "psi_inverse");
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  std::set<int> unused;
  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (p[i] > best) {
      best = p[i];
      out[static_cast<std::size_t>(i) - 1] = p[i];
    } else {
      unused.insert(p[i]);
    }
  }
  best = 0;
  for (int i = 1; i <= n; ++i) {
    if (out[static_cast<std::size_t>(i) - 1] != 0) {
      best = out[static_cast<std::size_t>(i) - 1];
      continue;
    }
    auto it = unused.lower_bound(best);
    if (it == unused.begin()) throw std::logic_error("psi_inverse: no value below the running maximum");
    --it;
    out[static_cast<std::size_t>(i) - 1] = *it;
    unused.erase(it);
  }
  return unchecked_permutation(std::move(out));
}

bool is_consistent(const ConsistentPair& cp) {
  const auto& c = cp.run_sizes;
  const auto& m = cp.marks;
  const std::size_t k = c.size();
  if (k == 0 || m.size() != k) return false;
  if (c[0] < 2) return false;
  for (int x : c)
    if (x < 1) return false;
  const int n = std::accumulate(c.begin(), c.end(), 0);
  if (m[0] != n) return false;
  for (std::size_t l = 1; l < k; ++l)
    if (m[l] >= m[l - 1]) return false;
  int suffix = 0;
  for (std::size_t l = k; l-- > 1;) {
    suffix += c[l];
    if (m[l] < suffix + 1) return false;
  }
  return true;
}

ConsistentPair extract_consistent_pair(const Permutation& p) {
  const int n = p.size();
  if (n <= 1) throw PreconditionError("extract_consistent_pair: length must be at least 2");
  if (p[1] != n) throw PreconditionError("extract_consistent_pair: first entry must be n");
  require_avoids(p, pat_231(), "extract_consistent_pair");
  ConsistentPair cp;
  cp.run_sizes = idr_sizes(p);
  cp.marks.push_back(n);
  PositionSet asc = asc_set(p);
  for (auto it = asc.rbegin(); it != asc.rend(); ++it) cp.marks.push_back(*it);
  if (!is_consistent(cp))
    throw PreconditionError("extract_consistent_pair: input is not in Av'(231)");
  return cp;
}

namespace {

void require_consistent(const ConsistentPair& cp, const char* who) {
  if (!is_consistent(cp)) throw std::invalid_argument(std::string(who) + ": inconsistent pair");
}

std::vector<int> build_asc_values(const std::vector<int>& c, const std::vector<int>& m) {
  const std::size_t k = c.size();
  const int n = m[0];
  if (k == 1) return Permutation::decreasing(n).values();
  // Drop the last run, build the shorter word, then re-insert the run
  // c_k (c_k - 1) ... 1 after entry m_k - c_k of the lifted word.
  const int ck = c.back(), mk = m.back();
  std::vector<int> c2(c.begin(), c.end() - 1);
  std::vector<int> m2;
  m2.reserve(k - 1);
  for (std::size_t l = 0; l + 1 < k; ++l) m2.push_back(m[l] - ck);
  std::vector<int> sigma = build_asc_values(c2, m2);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  const int slot = mk - ck;  // number of sigma entries before the run
  for (int i = 0; i < slot; ++i) out.push_back(sigma[static_cast<std::size_t>(i)] + ck);
  for (int v = ck; v >= 1; --v) out.push_back(v);
  for (std::size_t i = static_cast<std::size_t>(slot); i < sigma.size(); ++i)
    out.push_back(sigma[i] + ck);
  return out;
}

std::vector<int> build_atop_values(const std::vector<int>& c, const std::vector<int>& m) {
  const std::size_t k = c.size();
  const int n = m[0];
  if (k == 1) return Permutation::decreasing(n).values();
  // Remove the first run whose value interval is free of marks, build the
  // shorter word, then re-insert that interval as a descending factor just
  // before the entry of value m_p.
  std::vector<int> after(k, 0);  // after[j] = c_{j+1} + ... + c_k (0-based j)
  for (std::size_t j = k - 1; j-- > 0;) after[j] = after[j + 1] + c[j + 1];
  auto mark_hit = [&](int lo, int hi) {
    for (std::size_t l = 1; l < k; ++l)
      if (m[l] >= lo && m[l] <= hi) return true;
    return false;
  };
  std::size_t j = 0;
  while (j < k && mark_hit(after[j] + 1, after[j] + c[j])) ++j;
  if (j == k) throw std::logic_error("build_atop_perm: no removable run in a consistent pair");
  const int below = after[j];           // values covered by later runs
  const int run_hi = below + c[j];      // removed value interval (below, run_hi]
  const int head = n - below - c[j];    // c_1 + ... + c_{j-1}
  // m_p: smallest mark strictly larger than n - (c_1 + ... + c_{j-1}).
  int mp = 0;
  std::size_t p_idx = 0;
  for (std::size_t l = 0; l < k; ++l) {
    if (m[l] > n - head && (mp == 0 || m[l] < mp)) {
      mp = m[l];
      p_idx = l;
    }
  }
  if (mp == 0) throw std::logic_error("build_atop_perm: no mark above the threshold");
  std::vector<int> c2, m2;
  for (std::size_t l = 0; l < k; ++l)
    if (l != j) c2.push_back(c[l]);
  for (std::size_t l = 0; l < k; ++l) {
    if (l == p_idx) continue;
    m2.push_back(l < p_idx ? m[l] - c[j] : m[l]);
  }
  std::vector<int> sigma = build_atop_values(c2, m2);
  // Lift values above `below` and insert the run run_hi .. below+1 before
  // the entry of value mp.
  std::vector<int> lifted;
  lifted.reserve(sigma.size());
  for (int v : sigma) lifted.push_back(v > below ? v + c[j] : v);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  bool inserted = false;
  for (int v : lifted) {
    if (v == mp) {
      for (int w = run_hi; w > below; --w) out.push_back(w);
      inserted = true;
    }
    out.push_back(v);
  }
  if (!inserted) throw std::logic_error("build_atop_perm: entry of value m_p not found");
  return out;
}

} // namespace

Permutation build_asc_perm(const ConsistentPair& cp) {
  require_consistent(cp, "build_asc_perm");
  return unchecked_permutation(build_asc_values(cp.run_sizes, cp.marks));
}

Permutation build_atop_perm(const ConsistentPair& cp) {
  require_consistent(cp, "build_atop_perm");
  return unchecked_permutation(build_atop_values(cp.run_sizes, cp.marks));
}

namespace {

// Consistent pair of a member of Av'(231) read off the Atop side
// (uniqueness side of the construction).
ConsistentPair extract_atop_pair(const Permutation& p) {
  ConsistentPair cp;
  cp.run_sizes = idr_sizes(p);
  cp.marks.push_back(p.size());
  ValueSet tops = atop(p);
  for (auto it = tops.rbegin(); it != tops.rend(); ++it) cp.marks.push_back(*it);
  if (!is_consistent(cp))
    throw PreconditionError("theta_prime_inverse: input is not in Av'(231)");
  return cp;
}

void require_prime(const Permutation& p, const char* who) {
  if (!p.empty() && p[1] != p.size())
    throw PreconditionError(std::string(who) + ": first entry must be n");
  require_avoids(p, pat_231(), who);
}

} // namespace

Permutation theta_prime(const Permutation& p) {
  require_prime(p, "theta_prime");
  if (p.size() <= 1) return p;
  return build_atop_perm(extract_consistent_pair(p));
}

Permutation theta_prime_inverse(const Permutation& p) {
  require_prime(p, "theta_prime_inverse");
  if (p.size() <= 1) return p;
  return build_asc_perm(extract_atop_pair(p));
}

std::vector<Permutation> prime_blocks(const Permutation& p) {
  // Each block of the direct-sum decomposition begins with its own maximum,
  // so a block starting at position s ends exactly at position p[s].
  std::vector<Permutation> blocks;
  int start = 1;
  while (start <= p.size()) {
    const int end = p[start];
    if (end < start)
      throw PreconditionError("prime_blocks: input is not a direct sum of blocks led by their maximum");
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(end - start + 1));
    for (int i = start; i <= end && i <= p.size(); ++i) vals.push_back(p[i] - (start - 1));
    try {
      blocks.push_back(Permutation(std::move(vals)));
    } catch (const std::invalid_argument&) {
      throw PreconditionError("prime_blocks: input is not a direct sum of blocks led by their maximum");
    }
    start = end + 1;
  }
  return blocks;
}

namespace {

Permutation blockwise(const Permutation& p, Permutation (*f)(const Permutation&)) {
  Permutation out;
  for (const Permutation& block : prime_blocks(p)) out = direct_sum(out, f(block));
  return out;
}

} // namespace

Permutation theta(const Permutation& p) {
  require_avoids(p, pat_231(), "theta");
  return blockwise(p, &theta_prime);
}

Permutation theta_inverse(const Permutation& p) {
  require_avoids(p, pat_231(), "theta_inverse");
  return blockwise(p, &theta_prime_inverse);
}

Permutation conjugate_cr(const Permutation& p) {
  require_avoids(p, pat_312(), "conjugate_cr");
  return complement(reverse(theta(complement(reverse(p)))));
}

} // namespace permstat
