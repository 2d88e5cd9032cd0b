#include "permstat/claims.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "permstat/bijections.hpp"
#include "permstat/config.hpp"
#include "permstat/errors.hpp"
#include "permstat/set_stats.hpp"

namespace permstat::claims {

Engine::Engine(const std::vector<StatisticDef>& reg, int workers)
    : reg_(reg), workers_(workers < 1 ? 1 : workers) {}

Statistic Engine::stat(const std::string& name) const {
  if (name == "FirstEntry")
    return Statistic::set_valued("FirstEntry", [](const Permutation& p) {
      return std::to_string(p.empty() ? 0 : p[1]);
    });
  return resolve_statistic(name, reg_);
}

const std::vector<Permutation>& Engine::members(const ClassSpec& cls, int n) {
  auto key = std::make_pair(cls.label(), n);
  auto it = member_cache_.find(key);
  if (it == member_cache_.end()) it = member_cache_.emplace(key, class_members(cls, n)).first;
  return it->second;
}

const std::map<StatKey, std::uint64_t>& Engine::single_dist(const std::string& stat_name,
                                                            const ClassSpec& cls, int n) {
  auto key = std::make_tuple(stat_name, cls.label(), n);
  auto it = dist_cache_.find(key);
  if (it == dist_cache_.end()) {
    Statistic st = stat(stat_name);
    std::map<StatKey, std::uint64_t> counts;
    for (const Permutation& p : members(cls, n)) ++counts[StatKey{st(p)}];
    it = dist_cache_.emplace(std::move(key), std::move(counts)).first;
  }
  return it->second;
}

std::map<StatKey, std::uint64_t> Engine::joint_dist(const std::vector<std::string>& stat_names,
                                                    const ClassSpec& cls, int n) {
  if (stat_names.size() == 1) return single_dist(stat_names.front(), cls, n);
  std::vector<Statistic> stats;
  for (const std::string& name : stat_names) stats.push_back(stat(name));
  std::map<StatKey, std::uint64_t> counts;
  for (const Permutation& p : members(cls, n)) {
    StatKey key;
    key.reserve(stats.size());
    for (const Statistic& st : stats) key.push_back(st(p));
    ++counts[key];
  }
  return counts;
}

namespace {

std::string key_text(const StatKey& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ',';
    out += permstat::to_string(key[i]);
  }
  out += ')';
  return out;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

// st1 over class1 has the same distribution as st2 over class2 for every
// n up to the bound.
Claim dist_claim(std::string id, std::vector<std::string> suites, int default_n,
                 std::vector<std::string> stats1, std::string class1,
                 std::vector<std::string> stats2, std::string class2) {
  std::string desc = "dist(" + join(stats1) + " | " + parse_class(class1).label() + ") = dist(" +
                     join(stats2) + " | " + parse_class(class2).label() + ")";
  auto run = [stats1, class1, stats2, class2](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    const ClassSpec c1 = parse_class(class1), c2 = parse_class(class2);
    for (int n = 0; n <= n_max; ++n) {
      auto d1 = eng.joint_dist(stats1, c1, n);
      auto d2 = eng.joint_dist(stats2, c2, n);
      if (d1 != d2) {
        res.passed = false;
        for (const auto& [key, count] : d1) {
          auto it = d2.find(key);
          if (it == d2.end() || it->second != count) {
            res.detail = "n=" + std::to_string(n) + " key=" + key_text(key) + " lhs=" +
                         std::to_string(count) +
                         " rhs=" + (it == d2.end() ? "0" : std::to_string(it->second));
            break;
          }
        }
        if (res.detail.empty()) res.detail = "n=" + std::to_string(n) + " tables differ";
        return res;
      }
    }
    res.passed = true;
    return res;
  };
  return Claim{std::move(id), std::move(desc), std::move(suites), default_n, std::move(run)};
}

using MapFn = Permutation (*)(const Permutation&);

struct TransportSpec {
  MapFn map;
  std::string domain;                                      ///< class text
  std::vector<std::pair<std::string, std::string>> pairs;  ///< stat on input == stat on image
  std::string image_avoids;                                ///< pattern text, may be empty
  bool image_first_entry_max = false;
};

// Pointwise statistic transport through a bijection, checked member by
// member; also validates the image class.
Claim transport_claim(std::string id, std::vector<std::string> suites, int default_n,
                      std::string desc, TransportSpec spec) {
  auto run = [spec](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    const ClassSpec domain = parse_class(spec.domain);
    Permutation image_pattern;
    if (!spec.image_avoids.empty()) image_pattern = parse_permutation(spec.image_avoids);
    std::vector<std::pair<Statistic, Statistic>> stat_pairs;
    for (const auto& [a, b] : spec.pairs) stat_pairs.emplace_back(eng.stat(a), eng.stat(b));
    for (int n = 0; n <= n_max; ++n) {
      for (const Permutation& p : eng.members(domain, n)) {
        const Permutation q = spec.map(p);
        if (!image_pattern.empty() && contains(image_pattern, q)) {
          res.passed = false;
          res.detail = "n=" + std::to_string(n) + " p=" + permstat::to_string(p) +
                       " image contains " + permstat::to_string(image_pattern);
          return res;
        }
        if (spec.image_first_entry_max && !q.empty() && q[1] != n) {
          res.passed = false;
          res.detail = "n=" + std::to_string(n) + " p=" + permstat::to_string(p) +
                       " image does not begin with n";
          return res;
        }
        for (const auto& [in_st, out_st] : stat_pairs) {
          if (in_st(p) != out_st(q)) {
            res.passed = false;
            res.detail = "n=" + std::to_string(n) + " p=" + permstat::to_string(p) +
                         " image=" + permstat::to_string(q) + " " + in_st.alias() + "(p)=" +
                         permstat::to_string(in_st(p)) + " != " + out_st.alias() + "(image)=" +
                         permstat::to_string(out_st(q));
            return res;
          }
        }
      }
    }
    res.passed = true;
    return res;
  };
  return Claim{std::move(id), std::move(desc), std::move(suites), default_n, std::move(run)};
}

Claim injective_claim(std::string id, std::vector<std::string> suites, int default_n,
                      std::string desc, MapFn map, std::string domain) {
  auto run = [map, domain](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    const ClassSpec cls = parse_class(domain);
    for (int n = 0; n <= n_max; ++n) {
      std::set<Permutation> images;
      const auto& mem = eng.members(cls, n);
      for (const Permutation& p : mem) images.insert(map(p));
      if (images.size() != mem.size()) {
        res.passed = false;
        res.detail = "n=" + std::to_string(n) + " image count " +
                     std::to_string(images.size()) + " < class size " +
                     std::to_string(mem.size());
        return res;
      }
    }
    res.passed = true;
    return res;
  };
  return Claim{std::move(id), std::move(desc), std::move(suites), default_n, std::move(run)};
}

Claim roundtrip_claim(std::string id, std::vector<std::string> suites, int default_n,
                      std::string desc, MapFn forward, MapFn backward, std::string domain_fwd,
                      std::string domain_bwd) {
  auto run = [forward, backward, domain_fwd, domain_bwd](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
      for (const Permutation& p : eng.members(parse_class(domain_fwd), n))
        if (backward(forward(p)) != p) {
          res.passed = false;
          res.detail = "n=" + std::to_string(n) + " backward(forward(p)) != p for p=" +
                       permstat::to_string(p);
          return res;
        }
      for (const Permutation& q : eng.members(parse_class(domain_bwd), n))
        if (forward(backward(q)) != q) {
          res.passed = false;
          res.detail = "n=" + std::to_string(n) + " forward(backward(q)) != q for q=" +
                       permstat::to_string(q);
          return res;
        }
    }
    res.passed = true;
    return res;
  };
  return Claim{std::move(id), std::move(desc), std::move(suites), default_n, std::move(run)};
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// des over Av_n(231) follows the Narayana triangle; pins the descent
// counter against independent arithmetic.
Claim narayana_claim() {
  auto run = [](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    const ClassSpec cls = parse_class("231");
    for (int n = 0; n <= n_max; ++n) {
      std::map<StatKey, std::uint64_t> expected;
      if (n == 0) {
        expected[StatKey{0LL}] = 1;
      } else {
        for (int k = 1; k <= n; ++k)
          expected[StatKey{static_cast<long long>(k - 1)}] =
              static_cast<std::uint64_t>(binomial(n, k) * binomial(n, k - 1) / n);
      }
      if (eng.single_dist("des", cls, n) != expected) {
        res.passed = false;
        res.detail = "n=" + std::to_string(n) + " descent distribution departs from Narayana";
        return res;
      }
    }
    res.passed = true;
    return res;
  };
  return Claim{"sanity.des-narayana",
               "des over Av(231) follows the Narayana triangle",
               {},
               9,
               std::move(run)};
}

Claim makl_bridge_claim(std::string id, std::string domain, bool via_dbot) {
  std::string desc = via_dbot ? "makl(p) = sum of Dbot(p) on Av(231)"
                              : "makl(p) = sum of (Dtop(p)-1) on Av(312)";
  auto run = [domain, via_dbot](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    const Statistic makl_st = eng.stat("makl");
    const ClassSpec cls = parse_class(domain);
    for (int n = 0; n <= n_max; ++n)
      for (const Permutation& p : eng.members(cls, n)) {
        const ValueSet vs = via_dbot ? dbot(p) : dtop(p);
        long long sum = 0;
        for (int v : vs) sum += via_dbot ? v : v - 1;
        if (StatValue(sum) != makl_st(p)) {
          res.passed = false;
          res.detail = "n=" + std::to_string(n) + " p=" + permstat::to_string(p) +
                       " makl=" + permstat::to_string(makl_st(p)) + " sum=" +
                       std::to_string(sum);
          return res;
        }
      }
    res.passed = true;
    return res;
  };
  return Claim{std::move(id), std::move(desc), {"cor-maj-makl"}, 9, std::move(run)};
}

// On Av(312) the two [31]2 terms of foze'' vanish, so foze'' collapses to
// the occurrence count of [23]1 plus the descent number.
Claim thm2_identity_claim() {
  auto run = [](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    const Statistic foze2 = eng.stat("foze2");
    const VincularPattern t231 = parse_vincular("[23]1");
    const VincularPattern t21 = parse_vincular("[21]");
    const ClassSpec cls = parse_class("312");
    for (int n = 0; n <= n_max; ++n)
      for (const Permutation& p : eng.members(cls, n)) {
        const long long sum = count_occurrences(t231, p) + count_occurrences(t21, p);
        if (StatValue(sum) != foze2(p)) {
          res.passed = false;
          res.detail = "n=" + std::to_string(n) + " p=" + permstat::to_string(p);
          return res;
        }
      }
    res.passed = true;
    return res;
  };
  return Claim{"thm2.collapse",
               "foze'' = ([23]1) + ([21]) pointwise on Av(312)",
               {"thm2"},
               9,
               std::move(run)};
}

// The joint pair (foze'', mad) separates Av(312) from Av(231): some n
// witnesses a difference in both orders.
Claim negative_control_claim() {
  auto run = [](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    const std::vector<std::string> fm{"foze2", "mad"}, mf{"mad", "foze2"};
    const ClassSpec av312 = parse_class("312"), av231 = parse_class("231");
    for (int n = 1; n <= n_max; ++n) {
      auto lhs = eng.joint_dist(fm, av312, n);
      if (lhs != eng.joint_dist(fm, av231, n) && lhs != eng.joint_dist(mf, av231, n)) {
        res.passed = true;
        res.detail = "witness n=" + std::to_string(n) +
                     ": joint (foze'',mad) over Av(312) differs from both orders over Av(231)";
        return res;
      }
    }
    res.passed = false;
    res.detail = "no witnessing n found up to " + std::to_string(n_max);
    return res;
  };
  return Claim{"neg.foze2-mad",
               "joint (foze'',mad) over Av(312) is NOT equidistributed with (foze'',mad) or "
               "(mad,foze'') over Av(231)",
               {"negative-controls"},
               8,
               std::move(run)};
}

Claim phi_not_involution_claim() {
  auto run = [](Engine& eng, int n_max) {
    ClaimResult res;
    res.n_max = n_max;
    const ClassSpec cls = parse_class("231");
    for (int n = 1; n <= n_max; ++n)
      for (const Permutation& p : eng.members(cls, n))
        if (phi(phi(p)) != p) {
          res.passed = true;
          res.detail = "witness n=" + std::to_string(n) + " p=" + permstat::to_string(p) +
                       " phi(phi(p))=" + permstat::to_string(phi(phi(p)));
          return res;
        }
    res.passed = false;
    res.detail = "phi acted as an involution everywhere up to n=" + std::to_string(n_max);
    return res;
  };
  return Claim{"neg.phi-not-involution",
               "phi is not an involution: some p has phi(phi(p)) != p",
               {"negative-controls"},
               8,
               std::move(run)};
}

std::vector<Claim> build_manifest() {
  std::vector<Claim> claims;

  claims.push_back(transport_claim(
      "thm1.pointwise", {"thm1"}, 9,
      "phi on Av(231): inv(phi(p)) = foze''(p), Lrmax and the first entry are preserved, "
      "the image avoids 231",
      {&phi, "231", {{"foze2", "inv"}, {"Lrmax", "Lrmax"}, {"FirstEntry", "FirstEntry"}}, "231",
       false}));
  claims.push_back(injective_claim("thm1.injective", {"thm1"}, 9,
                                   "phi is injective on every Av_n(231)", &phi, "231"));
  claims.push_back(dist_claim("thm1.joint-dist", {"thm1"}, 8, {"foze2", "Lrmax"}, "231",
                              {"inv", "Lrmax"}, "231"));

  claims.push_back(transport_claim(
      "thm2.pointwise", {"thm2"}, 9,
      "psi on Av(312): foze''(p) = inv(psi(p)), Lrmax is preserved, the image avoids 321",
      {&psi, "312", {{"foze2", "inv"}, {"Lrmax", "Lrmax"}}, "321", false}));
  claims.push_back(thm2_identity_claim());
  claims.push_back(dist_claim("thm2.joint-dist", {"thm2"}, 8, {"foze2", "Lrmax"}, "312",
                              {"inv", "Lrmax"}, "321"));

  claims.push_back(
      dist_claim("cor1.dist", {"cor1"}, 9, {"foze2"}, "231", {"inv"}, "312"));

  claims.push_back(
      dist_claim("cor-mad.312-231", {"cor-mad"}, 9, {"foze2"}, "312", {"mad"}, "231"));
  claims.push_back(
      dist_claim("cor-mad.231-312", {"cor-mad"}, 9, {"foze2"}, "231", {"mad"}, "312"));

  claims.push_back(
      dist_claim("cor-other.foze1", {"cor-other"}, 9, {"foze1"}, "132", {"foze2"}, "231"));
  claims.push_back(
      dist_claim("cor-other.sist-a", {"cor-other"}, 9, {"sist"}, "213", {"foze2"}, "231"));
  claims.push_back(
      dist_claim("cor-other.sist-b", {"cor-other"}, 9, {"sist"}, "132", {"foze2"}, "312"));
  claims.push_back(
      dist_claim("cor-other.sist1-a", {"cor-other"}, 9, {"sist1"}, "132", {"foze2"}, "312"));
  claims.push_back(
      dist_claim("cor-other.sist1-b", {"cor-other"}, 9, {"sist1"}, "231", {"foze2"}, "231"));
  claims.push_back(
      dist_claim("cor-other.sist2-a", {"cor-other"}, 9, {"sist2"}, "132", {"foze2"}, "231"));
  claims.push_back(
      dist_claim("cor-other.sist2-b", {"cor-other"}, 9, {"sist2"}, "231", {"foze2"}, "312"));

  claims.push_back(transport_claim(
      "thm4.pointwise", {"thm4"}, 9,
      "theta' on Av'(231): i.d.r. sizes, Rlmaxl and Rlminl are preserved and Asc becomes Atop",
      {&theta_prime,
       "231'",
       {{"IdrSizes", "IdrSizes"}, {"Asc", "Atop"}, {"Rlmaxl", "Rlmaxl"}, {"Rlminl", "Rlminl"}},
       "231",
       true}));
  claims.push_back(roundtrip_claim("thm4.roundtrip", {"thm4"}, 8,
                                   "theta' and its inverse compose to the identity on Av'(231)",
                                   &theta_prime, &theta_prime_inverse, "231'", "231'"));
  claims.push_back(transport_claim(
      "cor2.pointwise", {"thm4"}, 9,
      "theta' on Av'(231): Des becomes Dbot, Rlmaxl and Rlminl are preserved",
      {&theta_prime,
       "231'",
       {{"Des", "Dbot"}, {"Rlmaxl", "Rlmaxl"}, {"Rlminl", "Rlminl"}},
       "231",
       true}));
  claims.push_back(dist_claim("cor2.joint-dist", {"thm4"}, 8, {"Des", "Rlmaxl", "Rlminl"}, "231'",
                              {"Dbot", "Rlmaxl", "Rlminl"}, "231'"));

  claims.push_back(transport_claim(
      "prop5.pointwise", {"prop5"}, 9,
      "theta on Av(231): Des becomes Dbot; Lrmax, Rlmaxl, Rlminl are preserved",
      {&theta,
       "231",
       {{"Des", "Dbot"}, {"Lrmax", "Lrmax"}, {"Rlmaxl", "Rlmaxl"}, {"Rlminl", "Rlminl"}},
       "231",
       false}));
  claims.push_back(dist_claim("prop5.joint-dist", {"prop5"}, 8,
                              {"Des", "Lrmax", "Rlmaxl", "Rlminl"}, "231",
                              {"Dbot", "Lrmax", "Rlmaxl", "Rlminl"}, "231"));

  claims.push_back(transport_claim(
      "prop6.pointwise", {"prop6"}, 9,
      "theta conjugated by complement-reverse on Av(312): Des becomes Dtop-1; Rlmin, Lrminl, "
      "Lrmaxl are preserved",
      {&conjugate_cr,
       "312",
       {{"Des", "Dtop-1"}, {"Rlmin", "Rlmin"}, {"Lrminl", "Lrminl"}, {"Lrmaxl", "Lrmaxl"}},
       "312",
       false}));
  claims.push_back(dist_claim("prop6.joint-dist", {"prop6"}, 8,
                              {"Des", "Rlmin", "Lrminl", "Lrmaxl"}, "312",
                              {"Dtop-1", "Rlmin", "Lrminl", "Lrmaxl"}, "312"));

  claims.push_back(
      dist_claim("cor-maj-makl.231", {"cor-maj-makl"}, 9, {"maj"}, "231", {"makl"}, "231"));
  claims.push_back(
      dist_claim("cor-maj-makl.312", {"cor-maj-makl"}, 9, {"maj"}, "312", {"makl"}, "312"));
  claims.push_back(dist_claim("cor-maj-makl.132-231", {"cor-maj-makl"}, 9, {"maj"}, "132",
                              {"makl"}, "231"));
  claims.push_back(dist_claim("cor-maj-makl.213-312", {"cor-maj-makl"}, 9, {"maj"}, "213",
                              {"makl"}, "312"));
  claims.push_back(makl_bridge_claim("cor-maj-makl.bridge-231", "231", true));
  claims.push_back(makl_bridge_claim("cor-maj-makl.bridge-312", "312", false));

  struct Row {
    const char* st1;
    const char* sigma;
    const char* st2;
    const char* tau;
  };
  const Row table1[] = {
      {"inv", "231", "foze2", "231"},  {"inv", "321", "foze2", "312"},
      {"inv", "312", "foze2", "231"},  {"mad", "231", "foze2", "312"},
      {"mad", "312", "foze2", "231"},  {"foze1", "132", "foze2", "231"},
      {"sist", "213", "foze2", "231"}, {"sist", "132", "foze2", "312"},
      {"sist1", "132", "foze2", "312"}, {"sist1", "231", "foze2", "231"},
      {"sist2", "132", "foze2", "231"}, {"sist2", "231", "foze2", "312"},
  };
  int row_no = 0;
  for (const Row& r : table1) {
    ++row_no;
    std::ostringstream id;
    id << "table1." << (row_no < 10 ? "0" : "") << row_no;
    claims.push_back(
        dist_claim(id.str(), {"table1"}, 9, {r.st1}, r.sigma, {r.st2}, r.tau));
  }

  const Row table2[] = {
      {"maj", "231", "makl", "231"},  {"maj", "132", "makl", "231"},
      {"maj", "312", "makl", "312"},  {"maj", "213", "makl", "312"},
      {"mak", "132", "makl", "231"},  {"mak", "312", "makl", "231"},
      {"mak", "213", "makl", "312"},  {"mak", "231", "makl", "312"},
      {"bast1", "132", "makl", "231"}, {"bast2", "231", "makl", "312"},
      {"foze", "132", "makl", "231"}, {"foze", "231", "makl", "312"},
      {"bast", "213", "makl", "231"}, {"bast", "231", "makl", "312"},
      {"mak", "132", "bast", "213"},  {"mak", "312", "bast", "213"},
      {"mak", "213", "bast", "231"},  {"mak", "231", "bast", "231"},
      {"bast2", "231", "bast", "231"}, {"foze", "231", "bast", "231"},
  };
  row_no = 0;
  for (const Row& r : table2) {
    ++row_no;
    std::ostringstream id;
    id << "table2." << (row_no < 10 ? "0" : "") << row_no;
    claims.push_back(
        dist_claim(id.str(), {"table2"}, 9, {r.st1}, r.sigma, {r.st2}, r.tau));
  }

  claims.push_back(negative_control_claim());
  claims.push_back(phi_not_involution_claim());
  claims.push_back(narayana_claim());

  return claims;
}

} // namespace

const std::vector<Claim>& manifest() {
  static const std::vector<Claim> claims = build_manifest();
  return claims;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "thm1",  "thm2",  "cor1",         "cor-mad",           "cor-other", "thm4", "prop5",
      "prop6", "cor-maj-makl", "table1", "table2", "negative-controls", "all"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<const Claim*> suite_claims(std::string_view suite) {
  if (!is_suite(suite)) throw UnknownNameError("unknown suite: " + std::string(suite));
  std::vector<const Claim*> out;
  for (const Claim& c : manifest()) {
    if (suite == "all" ||
        std::find(c.suites.begin(), c.suites.end(), suite) != c.suites.end())
      out.push_back(&c);
  }
  return out;
}

std::vector<ClaimResult> run_suite(std::string_view suite, int n_max_override, int workers,
                                   const std::vector<StatisticDef>& reg) {
  Engine eng(reg, workers);
  std::vector<ClaimResult> results;
  for (const Claim* claim : suite_claims(suite)) {
    const int bound = n_max_override > 0 ? n_max_override : claim->default_n_max;
    check_bound(bound);
    ClaimResult res = claim->run(eng, bound);
    res.id = claim->id;
    results.push_back(std::move(res));
  }
  return results;
}

} // namespace permstat::claims
