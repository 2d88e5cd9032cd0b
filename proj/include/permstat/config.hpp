#ifndef PERMSTAT_CONFIG_HPP
#define PERMSTAT_CONFIG_HPP

namespace permstat {

/// Compile-time ceiling for permutation lengths in exhaustive runs.
/// Everything in this library is desk-scale by design; Catalan classes at
/// n = 12 are the largest objects we ever enumerate.
inline constexpr int kHardMaxN = 12;

/// Default runtime safety bound for CLI-driven enumeration.
inline constexpr int kDefaultMaxN = 10;

/// Runtime safety bound: kDefaultMaxN unless the environment variable
/// PERMSTAT_MAX_N overrides it; always clamped to [0, kHardMaxN].
int max_n();

/// Throws BoundExceededError if n is negative or exceeds max_n().
void check_bound(int n);

} // namespace permstat

#endif
