// Command-line front end: evaluate statistics, apply the bijections, emit
// distribution tables, run the verification suites and the equidistribution
// scanner.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error, 3 unknown
// name, 4 precondition violation, 5 bound exceeded.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/bijections.hpp"
#include "permstat/claims.hpp"
#include "permstat/config.hpp"
#include "permstat/distributions.hpp"
#include "permstat/errors.hpp"
#include "permstat/patterns.hpp"
#include "permstat/permutation.hpp"

namespace {

using namespace permstat;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnknownName = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitBound = 5;

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

int cmd_stat(const std::string& perm_text, const std::string& stat_name,
             const std::string& format) {
  const Permutation p = parse_permutation(perm_text);
  const Statistic st = resolve_statistic(stat_name);
  const StatValue value = st(p);
  if (format == "json") {
    nlohmann::json j;
    j["permutation"] = to_string(p);
    j["statistic"] = {{"alias", st.alias()}, {"name", st.display()}};
    if (const long long* i = std::get_if<long long>(&value))
      j["value"] = *i;
    else
      j["value"] = std::get<std::string>(value);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(value) << "\n";
  }
  return kExitOk;
}

struct BijectionEntry {
  const char* name;
  Permutation (*fn)(const Permutation&);
};

const BijectionEntry kBijections[] = {
    {"phi", &phi},       {"phi-inv", &phi_inverse},     {"psi", &psi},
    {"psi-inv", &psi_inverse}, {"theta", &theta},       {"theta-inv", &theta_inverse},
    {"cr-conjugate", &conjugate_cr},
};

int cmd_map(const std::string& perm_text, const std::string& map_name) {
  const Permutation p = parse_permutation(perm_text);
  for (const BijectionEntry& e : kBijections)
    if (map_name == e.name) {
      std::cout << to_string(e.fn(p)) << "\n";
      return kExitOk;
    }
  throw UnknownNameError("unknown bijection: " + map_name);
}

int cmd_dist(const std::string& pattern_text, int n, const std::string& stats_text, bool compare,
             const std::string& format, int workers) {
  const ClassSpec cls = parse_class(pattern_text);
  std::vector<Statistic> stats;
  for (const std::string& name : split_names(stats_text)) stats.push_back(resolve_statistic(name));
  if (compare) {
    if (stats.size() != 2)
      throw ParseError("--compare needs exactly two statistics");
    const Statistic lhs[] = {stats[0]}, rhs[] = {stats[1]};
    DistributionTable a = distribution(cls, n, lhs, workers);
    DistributionTable b = distribution(cls, n, rhs, workers);
    std::cout << (equidistributed(a, b) ? "EQUIDISTRIBUTED" : "NOT EQUIDISTRIBUTED") << "\n";
    return kExitOk;
  }
  DistributionTable table = distribution(cls, n, stats, workers);
  if (format == "csv")
    std::cout << to_csv(table);
  else if (format == "json")
    std::cout << to_json(table);
  else
    std::cout << to_plain(table);
  return kExitOk;
}

int cmd_verify(const std::string& suite, int n_max, int workers, bool list_only) {
  if (list_only) {
    for (const claims::Claim* c : claims::suite_claims(suite))
      std::printf("%-26s n<=%-2d  %s\n", c->id.c_str(), c->default_n_max, c->description.c_str());
    return kExitOk;
  }
  const auto results = claims::run_suite(suite, n_max, workers);
  int failed = 0;
  const auto spec = claims::suite_claims(suite);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const claims::ClaimResult& r = results[i];
    std::printf("%s %-26s n<=%-2d %s", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.n_max,
                spec[i]->description.c_str());
    if (!r.detail.empty()) std::printf(" [%s]", r.detail.c_str());
    std::printf("\n");
    if (!r.passed) ++failed;
  }
  std::printf("verify %s: %zu claims, %zu passed, %d failed\n", suite.c_str(), results.size(),
              results.size() - static_cast<std::size_t>(failed), failed);
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_scan(const std::string& stats_text, int n_max, const std::string& format, int workers) {
  std::vector<Statistic> stats;
  if (stats_text == "all") {
    for (const StatisticDef& def : registry()) stats.push_back(Statistic::from_def(def));
  } else {
    for (const std::string& name : split_names(stats_text))
      stats.push_back(resolve_statistic(name));
  }
  std::vector<Permutation> patterns;
  for (const char* p : {"123", "132", "213", "231", "312", "321"})
    patterns.push_back(parse_permutation(p));
  const ScanReport report = scan_quadruples(stats, patterns, n_max, workers);
  if (format == "csv")
    std::cout << to_csv(report);
  else if (format == "json")
    std::cout << to_json(report);
  else
    std::cout << to_plain(report);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation statistics, bijections and equidistribution checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "plain";
  int workers = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  app.add_option("--workers", workers, "worker threads for enumeration")->check(CLI::PositiveNumber);

  std::string stat_perm, stat_name;
  CLI::App* stat_cmd = app.add_subcommand("stat", "evaluate a statistic on a permutation");
  stat_cmd->add_option("permutation", stat_perm, "permutation text (\"\" for the empty one)")
      ->required();
  stat_cmd->add_option("statistic", stat_name, "statistic name")->required();

  std::string map_perm, map_name;
  CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection to a permutation");
  map_cmd->add_option("permutation", map_perm, "permutation text")->required();
  map_cmd
      ->add_option("bijection", map_name,
                   "one of phi, phi-inv, psi, psi-inv, theta, theta-inv, cr-conjugate")
      ->required();

  std::string dist_pattern, dist_stats;
  int dist_n = 0;
  bool dist_compare = false;
  CLI::App* dist_cmd = app.add_subcommand("dist", "distribution table of statistics over a class");
  dist_cmd->add_option("pattern", dist_pattern, "avoided pattern (e.g. 231, 231', all)")
      ->required();
  dist_cmd->add_option("n", dist_n, "permutation length")->required();
  dist_cmd->add_option("stats", dist_stats, "comma-separated statistic names")->required();
  dist_cmd->add_flag("--compare", dist_compare, "compare the distributions of two statistics");

  std::string verify_suite;
  int verify_n = 0;
  bool verify_list = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", verify_suite, "suite name (see --list) or all")->required();
  verify_cmd->add_option("n_max", verify_n, "length bound (default: per-claim)");
  verify_cmd->add_option("--n-max", verify_n, "length bound (default: per-claim)");
  verify_cmd->add_flag("--list", verify_list, "list the claims of the suite and exit");

  std::string scan_stats;
  int scan_n = 8;
  CLI::App* scan_cmd =
      app.add_subcommand("scan", "scan statistic pairs and 3-letter classes for equidistribution");
  scan_cmd->add_option("stats", scan_stats, "comma-separated statistic names, or all")->required();
  scan_cmd->add_option("n_max", scan_n, "length bound (default 8)");
  scan_cmd->add_option("--n-max", scan_n, "length bound (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (stat_cmd->parsed()) return cmd_stat(stat_perm, stat_name, format);
    if (map_cmd->parsed()) return cmd_map(map_perm, map_name);
    if (dist_cmd->parsed())
      return cmd_dist(dist_pattern, dist_n, dist_stats, dist_compare, format, workers);
    if (verify_cmd->parsed()) return cmd_verify(verify_suite, verify_n, workers, verify_list);
    if (scan_cmd->parsed()) return cmd_scan(scan_stats, scan_n, format, workers);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnknownNameError& e) {
    std::cerr << "unknown name: " << e.what() << "\n";
    return kExitUnknownName;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const BoundExceededError& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  }
  return kExitOk;
}
