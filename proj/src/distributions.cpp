#include "permstat/distributions.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <sstream>

#include <json.hpp>

#include "permstat/config.hpp"
#include "permstat/errors.hpp"
#include "permstat/set_stats.hpp"

namespace permstat {

std::string ClassSpec::label() const {
  if (pattern.empty()) return "all";
  return std::string(first_entry_max ? "Av'(" : "Av(") + permstat::to_string(pattern) + ")";
}

ClassSpec parse_class(std::string_view text) {
  if (text == "all") return ClassSpec{};
  ClassSpec cls;
  if (!text.empty() && text.back() == '\'') {
    cls.first_entry_max = true;
    text.remove_suffix(1);
  }
  cls.pattern = parse_permutation(text);
  if (cls.pattern.empty()) throw ParseError("avoidance pattern must be non-empty");
  return cls;
}

namespace {

// Does appending `next` to `prefix` complete an occurrence of the 3-letter
// pattern ending at the new position?
bool completes_occurrence(const std::vector<int>& prefix, int next, const Permutation& sigma) {
  const int s1 = sigma[1], s2 = sigma[2], s3 = sigma[3];
  const int len = static_cast<int>(prefix.size());
  for (int a = 0; a < len; ++a) {
    for (int b = a + 1; b < len; ++b) {
      const int u = prefix[static_cast<std::size_t>(a)], v = prefix[static_cast<std::size_t>(b)];
      if ((u < v) == (s1 < s2) && (u < next) == (s1 < s3) && (v < next) == (s2 < s3)) return true;
    }
  }
  return false;
}

void backtrack_avoiders(const Permutation& sigma, int n, std::vector<int>& prefix,
                        std::vector<bool>& used,
                        const std::function<void(const Permutation&)>& fn) {
  if (static_cast<int>(prefix.size()) == n) {
    fn(unchecked_permutation(prefix));
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v) - 1]) continue;
    if (completes_occurrence(prefix, v, sigma)) continue;
    used[static_cast<std::size_t>(v) - 1] = true;
    prefix.push_back(v);
    backtrack_avoiders(sigma, n, prefix, used, fn);
    prefix.pop_back();
    used[static_cast<std::size_t>(v) - 1] = false;
  }
}

// Enumerates the members whose first entry is `first`, in lexicographic
// order. Strata are the unit of work distribution.
void enumerate_stratum(const ClassSpec& cls, int n, int first,
                       const std::function<void(const Permutation&)>& fn) {
  if (cls.first_entry_max && first != n) return;
  if (!cls.pattern.empty() && cls.pattern.size() == 3) {
    std::vector<int> prefix{first};
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    used[static_cast<std::size_t>(first) - 1] = true;
    backtrack_avoiders(cls.pattern, n, prefix, used, fn);
    return;
  }
  // General patterns (and the unrestricted class) filter S_n.
  std::vector<int> vals;
  for (int v = 1; v <= n; ++v)
    if (v != first) vals.push_back(v);
  std::sort(vals.begin(), vals.end());
  do {
    std::vector<int> word{first};
    word.insert(word.end(), vals.begin(), vals.end());
    Permutation p = unchecked_permutation(std::move(word));
    if (cls.pattern.empty() || !contains(cls.pattern, p)) fn(p);
  } while (std::next_permutation(vals.begin(), vals.end()));
}

} // namespace

void for_each_member(const ClassSpec& cls, int n,
                     const std::function<void(const Permutation&)>& fn) {
  check_bound(n);
  if (n == 0) {
    fn(Permutation());
    return;
  }
  for (int first = 1; first <= n; ++first) enumerate_stratum(cls, n, first, fn);
}

std::vector<Permutation> class_members(const ClassSpec& cls, int n) {
  std::vector<Permutation> out;
  for_each_member(cls, n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::uint64_t class_size(const ClassSpec& cls, int n) {
  std::uint64_t count = 0;
  for_each_member(cls, n, [&](const Permutation&) { ++count; });
  return count;
}

std::string to_string(const StatValue& v) {
  if (const long long* i = std::get_if<long long>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

Statistic Statistic::from_def(StatisticDef def) {
  Statistic s;
  s.alias_ = def.alias;
  s.display_ = def.name;
  s.def_ = std::move(def);
  return s;
}

Statistic Statistic::set_valued(std::string name,
                                std::function<std::string(const Permutation&)> fn) {
  Statistic s;
  s.alias_ = name;
  s.display_ = std::move(name);
  s.set_fn_ = std::move(fn);
  return s;
}

StatValue Statistic::operator()(const Permutation& p) const {
  if (def_) return evaluate(*def_, p);
  return set_fn_(p);
}

namespace {

struct SetStatEntry {
  const char* name;
  std::string (*fn)(const Permutation&);
};

const SetStatEntry kSetStats[] = {
    {"Des", [](const Permutation& p) { return render_set(des_set(p)); }},
    {"Asc", [](const Permutation& p) { return render_set(asc_set(p)); }},
    {"Dtop", [](const Permutation& p) { return render_set(dtop(p)); }},
    {"Dbot", [](const Permutation& p) { return render_set(dbot(p)); }},
    {"Atop", [](const Permutation& p) { return render_set(atop(p)); }},
    {"Lrmax", [](const Permutation& p) { return render_points(lrmax(p)); }},
    {"Rlmin", [](const Permutation& p) { return render_points(rlmin(p)); }},
    {"Lrmaxl", [](const Permutation& p) { return render_set(lrmaxl(p)); }},
    {"Lrminl", [](const Permutation& p) { return render_set(lrminl(p)); }},
    {"Rlmaxl", [](const Permutation& p) { return render_set(rlmaxl(p)); }},
    {"Rlminl", [](const Permutation& p) { return render_set(rlminl(p)); }},
    {"Dtop-1",
     [](const Permutation& p) {
       ValueSet s = dtop(p);
       for (int& x : s) --x;
       return render_set(s);
     }},
    {"IdrSizes", [](const Permutation& p) { return render_sizes(idr_sizes(p)); }},
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

} // namespace

std::vector<std::string> set_statistic_names() {
  std::vector<std::string> out;
  for (const SetStatEntry& e : kSetStats) out.emplace_back(e.name);
  return out;
}

Statistic resolve_statistic(std::string_view name, const std::vector<StatisticDef>& reg) {
  if (const StatisticDef* def = find_statistic(name, reg)) return Statistic::from_def(*def);
  for (const SetStatEntry& e : kSetStats)
    if (name == e.name) return Statistic::set_valued(e.name, e.fn);
  const std::string folded = lower(name);
  for (const SetStatEntry& e : kSetStats)
    if (folded == lower(e.name)) return Statistic::set_valued(e.name, e.fn);
  throw UnknownNameError("unknown statistic: " + std::string(name));
}

DistributionTable distribution(const ClassSpec& cls, int n, std::span<const Statistic> stats,
                               int workers) {
  check_bound(n);
  if (workers < 1) workers = 1;
  DistributionTable table;
  for (const Statistic& s : stats) {
    table.schema.push_back(s.alias());
    table.display.push_back(s.display());
  }
  table.n = n;
  table.class_label = cls.label();

  auto key_of = [&stats](const Permutation& p) {
    StatKey key;
    key.reserve(stats.size());
    for (const Statistic& s : stats) key.push_back(s(p));
    return key;
  };

  if (n == 0) {
    table.counts[key_of(Permutation())] = 1;
    return table;
  }

  using CountMap = std::map<StatKey, std::uint64_t>;
  auto run_strata = [&](int offset, int stride) {
    CountMap local;
    for (int first = 1 + offset; first <= n; first += stride)
      enumerate_stratum(cls, n, first, [&](const Permutation& p) { ++local[key_of(p)]; });
    return local;
  };

  if (workers == 1) {
    table.counts = run_strata(0, 1);
  } else {
    std::vector<std::future<CountMap>> futures;
    for (int w = 0; w < workers; ++w)
      futures.push_back(std::async(std::launch::async, run_strata, w, workers));
    for (auto& f : futures)
      for (auto& [key, count] : f.get()) table.counts[key] += count;
  }
  return table;
}

bool equidistributed(const DistributionTable& a, const DistributionTable& b) {
  if (a.schema.size() != b.schema.size())
    throw std::invalid_argument("equidistributed: key arity mismatch");
  return a.counts == b.counts;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

} // namespace

std::string to_plain(const DistributionTable& t) {
  std::ostringstream os;
  os << "# class=" << t.class_label << " n=" << t.n << " schema=";
  for (std::size_t i = 0; i < t.schema.size(); ++i) os << (i ? "," : "") << t.schema[i];
  os << '\n';
  for (const auto& [key, count] : t.counts) {
    for (const StatValue& v : key) os << to_string(v) << ' ';
    os << count << '\n';
  }
  return os.str();
}

std::string to_csv(const DistributionTable& t) {
  std::ostringstream os;
  for (const std::string& s : t.schema) os << csv_escape(s) << ',';
  os << "count\n";
  for (const auto& [key, count] : t.counts) {
    for (const StatValue& v : key) os << csv_escape(to_string(v)) << ',';
    os << count << '\n';
  }
  return os.str();
}

std::string to_json(const DistributionTable& t) {
  nlohmann::json j;
  j["class"] = t.class_label;
  j["n"] = t.n;
  j["schema"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.schema.size(); ++i)
    j["schema"].push_back({{"alias", t.schema[i]}, {"name", t.display[i]}});
  j["counts"] = nlohmann::json::array();
  for (const auto& [key, count] : t.counts) {
    nlohmann::json jkey = nlohmann::json::array();
    for (const StatValue& v : key) {
      if (const long long* i = std::get_if<long long>(&v))
        jkey.push_back(*i);
      else
        jkey.push_back(std::get<std::string>(v));
    }
    j["counts"].push_back(nlohmann::json::array({jkey, count}));
  }
  return j.dump(2) + "\n";
}

namespace {

// Signature of (statistic, class): the concatenated distributions for
// n = 1..n_max, serialized deterministically.
std::string signature(const Statistic& st, const ClassSpec& cls, int n_max, int workers) {
  std::ostringstream os;
  const Statistic stats[] = {st};
  for (int n = 1; n <= n_max; ++n) {
    DistributionTable t = distribution(cls, n, stats, workers);
    os << "|n" << n << ':';
    for (const auto& [key, count] : t.counts)
      os << to_string(key.front()) << '=' << count << ';';
  }
  return os.str();
}

Permutation apply_symmetry(const Permutation& p, int g) {
  switch (g) {
    case 0: return reverse(p);
    case 1: return complement(p);
    default: return complement(reverse(p));
  }
}

const char* symmetry_name(int g) { return g == 0 ? "r" : (g == 1 ? "c" : "rc"); }

// For each symmetry g, the partial map st -> st' with st'(p) = st(g(p)) for
// every p up to length 6 (exhaustively verified pointwise identities).
std::vector<std::vector<int>> symmetry_stat_maps(std::span<const Statistic> stats) {
  std::vector<Permutation> hosts;
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
    do hosts.push_back(unchecked_permutation(vals));
    while (std::next_permutation(vals.begin(), vals.end()));
  }
  const std::size_t m = stats.size();
  std::vector<std::vector<StatValue>> plain(m);
  for (std::size_t s = 0; s < m; ++s)
    for (const Permutation& h : hosts) plain[s].push_back(stats[s](h));
  std::vector<std::vector<int>> maps(3, std::vector<int>(m, -1));
  for (int g = 0; g < 3; ++g) {
    std::vector<Permutation> mapped;
    mapped.reserve(hosts.size());
    for (const Permutation& h : hosts) mapped.push_back(apply_symmetry(h, g));
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<StatValue> composed;
      composed.reserve(hosts.size());
      for (const Permutation& h : mapped) composed.push_back(stats[s](h));
      for (std::size_t t = 0; t < m; ++t)
        if (composed == plain[t]) {
          maps[static_cast<std::size_t>(g)][s] = static_cast<int>(t);
          break;
        }
    }
  }
  return maps;
}

} // namespace

ScanReport scan_quadruples(std::span<const Statistic> stats,
                           const std::vector<Permutation>& patterns, int n_max, int workers) {
  check_bound(n_max);
  ScanReport report;
  report.n_max = n_max;
  for (const Statistic& s : stats) report.stats.push_back(s.alias());
  for (const Permutation& p : patterns) report.patterns.push_back(permstat::to_string(p));

  struct Pair {
    std::size_t stat;
    std::size_t pat;
  };
  std::vector<Pair> pairs;
  std::vector<std::string> sigs;
  for (std::size_t s = 0; s < stats.size(); ++s)
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      pairs.push_back({s, p});
      sigs.push_back(signature(stats[s], ClassSpec{patterns[p], false}, n_max, workers));
    }

  // Quadruples, canonically oriented by (stat index, pattern index).
  struct Quad {
    std::size_t a;
    std::size_t b;  // indices into `pairs`, a <= b
  };
  auto pair_key = [&](std::size_t i) { return std::make_pair(pairs[i].stat, pairs[i].pat); };
  std::vector<Quad> quads;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i; j < pairs.size(); ++j)
      if (sigs[i] == sigs[j]) {
        if (pair_key(i) <= pair_key(j))
          quads.push_back({i, j});
        else
          quads.push_back({j, i});
      }
  std::sort(quads.begin(), quads.end(), [&](const Quad& x, const Quad& y) {
    return std::make_pair(pair_key(x.a), pair_key(x.b)) <
           std::make_pair(pair_key(y.a), pair_key(y.b));
  });
  quads.erase(std::unique(quads.begin(), quads.end(),
                          [](const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }),
              quads.end());

  auto find_pair = [&](std::size_t stat, const Permutation& pat) -> int {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i].stat == stat && patterns[pairs[i].pat] == pat) return static_cast<int>(i);
    return -1;
  };
  auto quad_index = [&](std::size_t a, std::size_t b) -> int {
    for (std::size_t q = 0; q < quads.size(); ++q)
      if (quads[q].a == a && quads[q].b == b) return static_cast<int>(q);
    return -1;
  };

  const std::vector<std::vector<int>> stat_maps = symmetry_stat_maps(stats);

  auto quad_text = [&](const Quad& q) {
    return "(" + stats[pairs[q.a].stat].alias() + "," + stats[pairs[q.b].stat].alias() + ";" +
           report.patterns[pairs[q.a].pat] + "," + report.patterns[pairs[q.b].pat] + ")";
  };

  for (std::size_t qi = 0; qi < quads.size(); ++qi) {
    const Quad& q = quads[qi];
    ScanQuadruple out;
    out.st1 = stats[pairs[q.a].stat].alias();
    out.st2 = stats[pairs[q.b].stat].alias();
    out.sigma = report.patterns[pairs[q.a].pat];
    out.tau = report.patterns[pairs[q.b].pat];
    if (q.a == q.b) {
      out.annotation = "diagonal";
    } else {
      out.annotation = "primary";
      for (int g = 0; g < 3 && out.annotation == "primary"; ++g) {
        const int ma = stat_maps[static_cast<std::size_t>(g)][pairs[q.a].stat];
        const int mb = stat_maps[static_cast<std::size_t>(g)][pairs[q.b].stat];
        if (ma < 0 || mb < 0) continue;
        const int ia = find_pair(static_cast<std::size_t>(ma),
                                 apply_symmetry(patterns[pairs[q.a].pat], g));
        const int ib = find_pair(static_cast<std::size_t>(mb),
                                 apply_symmetry(patterns[pairs[q.b].pat], g));
        if (ia < 0 || ib < 0) continue;
        std::size_t xa = static_cast<std::size_t>(ia), xb = static_cast<std::size_t>(ib);
        if (pair_key(xa) > pair_key(xb)) std::swap(xa, xb);
        const int other = quad_index(xa, xb);
        if (other < 0 || static_cast<std::size_t>(other) == qi) continue;
        if (static_cast<std::size_t>(other) < qi) {
          out.annotation = "derived";
          out.detail = std::string("via ") + symmetry_name(g) + " from " +
                       quad_text(quads[static_cast<std::size_t>(other)]);
        }
      }
    }
    report.quadruples.push_back(std::move(out));
  }
  return report;
}

std::string to_plain(const ScanReport& r) {
  std::ostringstream os;
  os << "# scan n_max=" << r.n_max << " stats=";
  for (std::size_t i = 0; i < r.stats.size(); ++i) os << (i ? "," : "") << r.stats[i];
  os << " patterns=";
  for (std::size_t i = 0; i < r.patterns.size(); ++i) os << (i ? "," : "") << r.patterns[i];
  os << '\n';
  for (const ScanQuadruple& q : r.quadruples) {
    os << '(' << q.st1 << ',' << q.st2 << ';' << q.sigma << ',' << q.tau << ") " << q.annotation;
    if (!q.detail.empty()) os << ' ' << q.detail;
    os << '\n';
  }
  return os.str();
}

std::string to_csv(const ScanReport& r) {
  std::ostringstream os;
  os << "st1,st2,sigma,tau,annotation,detail\n";
  for (const ScanQuadruple& q : r.quadruples)
    os << csv_escape(q.st1) << ',' << csv_escape(q.st2) << ',' << q.sigma << ',' << q.tau << ','
       << q.annotation << ',' << csv_escape(q.detail) << '\n';
  return os.str();
}

std::string to_json(const ScanReport& r) {
  nlohmann::json j;
  j["n_max"] = r.n_max;
  j["stats"] = r.stats;
  j["patterns"] = r.patterns;
  j["quadruples"] = nlohmann::json::array();
  for (const ScanQuadruple& q : r.quadruples)
    j["quadruples"].push_back({{"st1", q.st1},
                               {"st2", q.st2},
                               {"sigma", q.sigma},
                               {"tau", q.tau},
                               {"annotation", q.annotation},
                               {"detail", q.detail}});
  return j.dump(2) + "\n";
}

} // namespace permstat
