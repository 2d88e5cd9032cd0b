#ifndef PERMSTAT_CLAIMS_HPP
#define PERMSTAT_CLAIMS_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/distributions.hpp"

namespace permstat::claims {

/// Shared state for one verification run: the statistic registry in force
/// (tests may pass a mutated copy), the length bound, the worker count, and
/// enumeration/distribution caches.
class Engine {
public:
  Engine(const std::vector<StatisticDef>& reg, int workers);

  const std::vector<StatisticDef>& reg() const noexcept { return reg_; }
  int workers() const noexcept { return workers_; }

  /// Resolves statistic names against reg(); also knows the claim-only
  /// statistic "FirstEntry".
  Statistic stat(const std::string& name) const;

  const std::vector<Permutation>& members(const ClassSpec& cls, int n);

  /// Cached single-statistic distribution counts.
  const std::map<StatKey, std::uint64_t>& single_dist(const std::string& stat_name,
                                                      const ClassSpec& cls, int n);

  std::map<StatKey, std::uint64_t> joint_dist(const std::vector<std::string>& stat_names,
                                              const ClassSpec& cls, int n);

private:
  const std::vector<StatisticDef>& reg_;
  int workers_;
  std::map<std::pair<std::string, int>, std::vector<Permutation>> member_cache_;
  std::map<std::tuple<std::string, std::string, int>, std::map<StatKey, std::uint64_t>>
      dist_cache_;
};

struct ClaimResult {
  std::string id;
  bool passed = false;
  int n_max = 0;       ///< bound the claim actually ran with
  std::string detail;  ///< counterexample on failure, witness on some passes
};

/// One verifiable claim. `run` is exhaustive up to the length bound and
/// reports the first counterexample on failure.
struct Claim {
  std::string id;
  std::string description;
  std::vector<std::string> suites;  ///< suites containing this claim ("all" is implicit)
  int default_n_max;
  std::function<ClaimResult(Engine&, int n_max)> run;
};

const std::vector<Claim>& manifest();

/// The suite names accepted by the CLI.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Claims of a suite, in manifest order. Throws UnknownNameError.
std::vector<const Claim*> suite_claims(std::string_view suite);

/// Runs a suite; n_max_override <= 0 keeps each claim's default bound.
std::vector<ClaimResult> run_suite(std::string_view suite, int n_max_override, int workers,
                                   const std::vector<StatisticDef>& reg = registry());

} // namespace permstat::claims

#endif
