#include "permstat/config.hpp"

#include <cstdlib>
#include <string>

#include "permstat/errors.hpp"

namespace permstat {

int max_n() {
  int bound = kDefaultMaxN;
  if (const char* env = std::getenv("PERMSTAT_MAX_N")) {
    try {
      bound = std::stoi(env);
    } catch (const std::exception&) {
      bound = kDefaultMaxN;
    }
  }
  if (bound < 0) bound = 0;
  if (bound > kHardMaxN) bound = kHardMaxN;
  return bound;
}

void check_bound(int n) {
  if (n < 0 || n > max_n())
    throw BoundExceededError("length " + std::to_string(n) + " exceeds the safety bound " +
                             std::to_string(max_n()));
}

} // namespace permstat
