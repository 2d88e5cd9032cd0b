#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permstat/errors.hpp"
#include "permstat/patterns.hpp"
#include "permstat/permutation.hpp"

using namespace permstat;

namespace {
Permutation P(const char* text) { return parse_permutation(text); }
} // namespace

TEST_CASE("construction validates the rearrangement invariant") {
  CHECK_NOTHROW(Permutation({2, 1, 3}));
  CHECK_NOTHROW(Permutation());
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 2, 4}), std::invalid_argument);
}

TEST_CASE("text round trip") {
  CHECK(to_string(P("321654")) == "321654");
  CHECK(P("3,2,1,6,5,4") == P("321654"));
  CHECK(P("") == Permutation());
  CHECK(to_string(Permutation()) == "");
  Permutation big = Permutation::identity(11);
  CHECK(to_string(big) == "1,2,3,4,5,6,7,8,9,10,11");
  CHECK(parse_permutation(to_string(big)) == big);
  CHECK_THROWS_AS(P("3x1"), ParseError);
  CHECK_THROWS_AS(P("1,,2"), ParseError);
  CHECK_THROWS_AS(P("0"), ParseError);
  CHECK_THROWS_AS(P("11"), ParseError);  // compact form: duplicate digit
}

TEST_CASE("reverse") {
  CHECK(reverse(P("361524")) == P("425163"));
  CHECK(reverse(Permutation()) == Permutation());
  CHECK(reverse(P("1")) == P("1"));
}

TEST_CASE("complement") {
  CHECK(complement(P("321")) == P("123"));
  CHECK(complement(P("7653124")) == P("1235764"));
  CHECK(complement(Permutation()) == Permutation());
}

TEST_CASE("group inverse") {
  CHECK(group_inverse(P("312")) == P("231"));
  CHECK(group_inverse(Permutation::identity(5)) == Permutation::identity(5));
  // compose-to-identity oracle
  const Permutation p = P("7615324");
  const Permutation q = group_inverse(p);
  CHECK(q == P("3657421"));
  for (int i = 1; i <= p.size(); ++i) CHECK(q[p[i]] == i);
}

TEST_CASE("involution and composition properties, exhaustive n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    for (const Permutation& p : oracles::all_perms(n)) {
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
      CHECK(group_inverse(group_inverse(p)) == p);
    }
  }
}

TEST_CASE("direct and skew sums") {
  CHECK(direct_sum(P("21"), P("1")) == P("213"));
  CHECK(direct_sum(Permutation(), P("312")) == P("312"));
  CHECK(direct_sum(P("1"), P("12")) == P("123"));
  CHECK(skew_sum(P("1"), P("12")) == P("312"));
  CHECK(skew_sum(P("1"), Permutation()) == P("1"));
  CHECK(skew_sum(P("1"), P("21")) == P("321"));
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const Permutation& x : oracles::all_perms(a))
        for (const Permutation& y : oracles::all_perms(b)) {
          CHECK(direct_sum(x, y).size() == a + b);
          CHECK(skew_sum(x, y).size() == a + b);
        }
}

TEST_CASE("decompose_231 on the examples") {
  auto [a1, b1] = decompose_231(P("321654"));
  CHECK(a1 == P("21"));
  CHECK(b1 == P("321"));
  auto [a2, b2] = decompose_231(P("1"));
  CHECK(a2 == Permutation());
  CHECK(b2 == Permutation());
  auto [a3, b3] = decompose_231(P("213"));
  CHECK(a3 == P("1"));
  CHECK(b3 == P("1"));
  CHECK_THROWS_AS(decompose_231(Permutation()), PreconditionError);
  CHECK_THROWS_AS(decompose_231(P("231")), PreconditionError);
}

TEST_CASE("decompose_231 reconstructs, components avoid 231, split unique, n <= 8") {
  const Permutation sigma231 = P("231");
  for (int n = 1; n <= 8; ++n) {
    for (const Permutation& p : oracles::all_perms(n)) {
      if (oracles::naive_contains(sigma231, p)) continue;
      auto [alpha, beta] = decompose_231(p);
      CHECK(direct_sum(skew_sum(Permutation::identity(1), alpha), beta) == p);
      CHECK(!contains(sigma231, alpha));
      CHECK(!contains(sigma231, beta));
      CHECK(alpha.size() == p[1] - 1);
      CHECK(beta.size() == n - p[1]);
      // Lemma uniqueness: no other split reconstructs p from 231-avoiding parts.
      int splits = 0;
      for (int la = 0; la < n; ++la) {
        std::vector<int> av, bv;
        for (int i = 2; i <= 1 + la; ++i) av.push_back(p[i]);
        for (int i = la + 2; i <= n; ++i) bv.push_back(p[i] - (la + 1));
        try {
          Permutation a(av), b(bv);
          if (direct_sum(skew_sum(Permutation::identity(1), a), b) == p &&
              !contains(sigma231, a) && !contains(sigma231, b))
            ++splits;
        } catch (const std::invalid_argument&) {
        }
      }
      CHECK(splits == 1);
    }
  }
}

TEST_CASE("complement-reverse maps Av(231) onto Av(312) bijectively, n <= 8") {
  const Permutation s231 = P("231"), s312 = P("312");
  for (int n = 0; n <= 8; ++n) {
    std::set<Permutation> images;
    std::size_t avoiders231 = 0, avoiders312 = 0;
    for (const Permutation& p : oracles::all_perms(n)) {
      if (n < 3 || !contains(s312, p)) ++avoiders312;
      if (n >= 3 && contains(s231, p)) continue;
      ++avoiders231;
      const Permutation q = complement(reverse(p));
      if (n >= 3) CHECK(!contains(s312, q));
      images.insert(q);
    }
    CHECK(images.size() == avoiders231);
    CHECK(avoiders231 == avoiders312);
  }
}
