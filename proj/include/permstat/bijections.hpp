#ifndef PERMSTAT_BIJECTIONS_HPP
#define PERMSTAT_BIJECTIONS_HPP

#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// The pair of sequences (c_1..c_k, m_1..m_k) encoding a permutation of
/// Av'_n(231): run_sizes are the i.d.r. block cardinalities, marks are
/// (n, then the ascent data m_2 > ... > m_k). Consistency requires
/// c_1 >= 2, sum c = n, n = m_1 > m_2 > ... > m_k, and
/// m_l >= c_l + c_{l+1} + ... + c_k + 1 for 1 < l <= k.
struct ConsistentPair {
  std::vector<int> run_sizes;  ///< c_1..c_k
  std::vector<int> marks;      ///< m_1..m_k

  auto operator<=>(const ConsistentPair&) const = default;
};

bool is_consistent(const ConsistentPair& cp);

/// Recursive statistic-transporting bijection on Av(231): preserves length,
/// first entry and Lrmax, and carries foze'' to inv. Throws
/// PreconditionError when the argument contains 231.
Permutation phi(const Permutation& p);
Permutation phi_inverse(const Permutation& p);

/// Simion-Schmidt bijection Av(312) -> Av(321): left-to-right maxima stay
/// fixed, the remaining entries are rewritten in increasing order. Throws
/// PreconditionError when the argument contains 312.
Permutation psi(const Permutation& p);

/// Inverse of psi, Av(321) -> Av(312): left-to-right maxima stay fixed and
/// each remaining slot greedily receives the largest unused value below the
/// current maximum. Throws PreconditionError when the argument contains 321.
Permutation psi_inverse(const Permutation& p);

/// Reads the consistent pair off a permutation in Av'_n(231), n >= 2:
/// run sizes from the i.d.r. partition, marks from n and the ascent set
/// in decreasing order. Throws PreconditionError unless p avoids 231,
/// begins with n and has length >= 2.
ConsistentPair extract_consistent_pair(const Permutation& p);

/// The unique member of Av'_n(231) whose i.d.r. sizes are the run sizes and
/// whose ascent set is {m_k, ..., m_2}. Inverse of extract_consistent_pair.
/// Throws std::invalid_argument on an inconsistent pair.
Permutation build_asc_perm(const ConsistentPair& cp);

/// The unique member of Av'_n(231) whose i.d.r. sizes are the run sizes and
/// whose ascent-top set is {m_k, ..., m_2}.
/// Throws std::invalid_argument on an inconsistent pair.
Permutation build_atop_perm(const ConsistentPair& cp);

/// Bijection of Av'_n(231) onto itself: preserves the i.d.r. size sequence,
/// Rlmaxl and Rlminl, and turns Asc into Atop (hence Des into Dbot).
/// Lengths <= 1 are fixed points. Throws PreconditionError unless the
/// argument is in Av'(231).
Permutation theta_prime(const Permutation& p);
Permutation theta_prime_inverse(const Permutation& p);

/// The unique splitting of a 231-avoider into a direct sum of blocks that
/// each begin with their own maximum. Exposed for tests and tooling.
std::vector<Permutation> prime_blocks(const Permutation& p);

/// Blockwise extension of theta_prime to all of Av(231): transports
/// (Des, Lrmax, Rlmaxl, Rlminl) to (Dbot, Lrmax, Rlmaxl, Rlminl).
/// Throws PreconditionError when the argument contains 231.
Permutation theta(const Permutation& p);
Permutation theta_inverse(const Permutation& p);

/// theta conjugated by complement-reverse: a bijection of Av(312) onto
/// itself carrying Des to Dtop - 1 and preserving Rlmin, Lrminl, Lrmaxl.
/// Throws PreconditionError when the argument contains 312.
Permutation conjugate_cr(const Permutation& p);

} // namespace permstat

#endif
