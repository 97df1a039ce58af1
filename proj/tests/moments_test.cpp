#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <thread>

#include "oracles.hpp"
#include "pbell/distribution.hpp"
#include "pbell/moments.hpp"

using namespace pbell;

namespace {

ProviderPtr provider(const char *spec) { return make_provider(DistributionSpec::parse(spec)); }

const std::vector<const char *> kBuiltins{"det:1", "bernoulli:1/2", "discrete:(0,1/3);(2,2/3)", "poisson:1"};

} // namespace

TEST_CASE("distribution grammar") {
  CHECK(DistributionSpec::parse("det:1").to_string() == "det:1");
  CHECK(DistributionSpec::parse("det:-3/6").to_string() == "det:-1/2");
  CHECK(DistributionSpec::parse("bernoulli:2/4").to_string() == "bernoulli:1/2");
  CHECK(DistributionSpec::parse("discrete:(0,1/3);(2,2/3)").to_string() == "discrete:(0,1/3);(2,2/3)");
  CHECK(DistributionSpec::parse("poisson:3/2").to_string() == "poisson:3/2");

  CHECK_THROWS_AS(DistributionSpec::parse("bernoulli:3/2"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("bernoulli:-1"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("poisson:-1"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("discrete:(0,1/3);(2,1/3)"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("discrete:(0,-1);(2,2)"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("discrete:(0,1"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("discrete:"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("gauss:1"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("det"), std::invalid_argument);
  CHECK_THROWS_AS(DistributionSpec::parse("det:0.5"), std::invalid_argument);
}

TEST_CASE("built-in moments") {
  CHECK(provider("det:1")->moment(5) == Rational(1));
  CHECK(provider("bernoulli:1/2")->moment(3) == Rational::parse("1/2"));
  CHECK(provider("poisson:1")->moment(3) == Rational(5));
  CHECK(provider("discrete:(0,1/3);(2,2/3)")->moment(2) == Rational::parse("8/3"));
  CHECK(provider("det:0")->moment(0) == Rational(1));
  for (const char *spec : kBuiltins) {
    auto p = provider(spec);
    CHECK(p->moment(0) == Rational(1));
    CHECK(p->moment(7) == p->moment(7));
    CHECK(p->name() == spec);
  }
}

TEST_CASE("poisson(1) moments are Bell numbers") {
  auto p = provider("poisson:1");
  for (unsigned n = 0; n <= 10; ++n)
    CHECK(p->moment(n) == Rational(Integer(std::to_string(oracle::bell_number(n)), 10)));
}

TEST_CASE("poisson moments match the Touchard polynomial at the rate") {
  // E[Y^n] = sum_k {n,k} rate^k, classical triangle from the oracle.
  const Rational rate = Rational::parse("3/2");
  auto p = make_provider(DistributionSpec(Poisson{rate}));
  const auto s = oracle::stirling_triangle(9);
  for (unsigned n = 0; n <= 9; ++n) {
    Rational touchard;
    for (unsigned k = 0; k <= n; ++k)
      touchard += Rational(s[n][k]) * pow(rate, k);
    CHECK(p->moment(n) == touchard);
  }
}

TEST_CASE("sum_moment") {
  auto bern = provider("bernoulli:1/2");
  CHECK(sum_moment(*bern, 0, 3) == Rational(0));
  CHECK(sum_moment(*bern, 0, 0) == Rational(1));
  CHECK(sum_moment(*bern, 5, 0) == Rational(1));
  CHECK(sum_moment(*bern, 2, 2) == Rational::parse("3/2"));

  for (const char *spec : kBuiltins) {
    auto p = provider(spec);
    for (unsigned n = 0; n <= 15; ++n)
      CHECK(sum_moment(*p, 1, n) == p->moment(n));
  }

  const Rational c = Rational::parse("-2/3");
  auto det = make_provider(DistributionSpec(Deterministic{c}));
  for (unsigned k = 0; k <= 5; ++k)
    for (unsigned n = 0; n <= 8; ++n)
      CHECK(sum_moment(*det, k, n) == pow(Rational(k) * c, n));
}

TEST_CASE("joint_moment") {
  const std::vector<unsigned> ones{1, 1};
  for (const char *spec : kBuiltins) {
    auto p = provider(spec);
    CHECK(joint_moment(*p, 2, 0, ones) == p->moment(1) * p->moment(1));
    CHECK(joint_moment(*p, 0, 0, {}) == Rational(1));
    CHECK(joint_moment(*p, 0, 2, {}) == Rational(0));
  }
  CHECK(joint_moment(*provider("bernoulli:1/2"), 2, 1, ones) == Rational::parse("1/2"));
  CHECK_THROWS_AS(joint_moment(*provider("det:1"), 3, 1, ones), std::invalid_argument);

  SUBCASE("all-zero exponents reduce to sum_moment") {
    for (const char *spec : kBuiltins) {
      auto p = provider(spec);
      for (unsigned k = 0; k <= 4; ++k)
        for (unsigned a = 0; a <= 6; ++a) {
          const std::vector<unsigned> zeros(k, 0);
          CHECK(joint_moment(*p, k, a, zeros) == sum_moment(*p, k, a));
        }
    }
  }

  SUBCASE("permutation symmetry") {
    for (const char *spec : kBuiltins) {
      auto p = provider(spec);
      for (unsigned k = 1; k <= 3; ++k) {
        std::vector<unsigned> l(k, 0);
        for (;;) {
          std::vector<unsigned> perm = l;
          std::sort(perm.begin(), perm.end());
          for (unsigned a = 0; a <= 3; ++a) {
            const Rational base = joint_moment(*p, k, a, l);
            do {
              CHECK(joint_moment(*p, k, a, perm) == base);
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
          std::size_t i = 0;
          while (i < k && l[i] == 3)
            l[i++] = 0;
          if (i == k)
            break;
          ++l[i];
        }
      }
    }
  }

  SUBCASE("exhaustive outcome enumeration on finite laws") {
    for (const char *spec : {"det:1", "bernoulli:1/2", "discrete:(0,1/3);(2,2/3)", "discrete:(-1,1/4);(3,3/4)"}) {
      const DistributionSpec ds = DistributionSpec::parse(spec);
      auto p = make_provider(ds);
      for (const std::vector<unsigned> &l : std::vector<std::vector<unsigned>>{{}, {2}, {1, 3}, {2, 0, 1}})
        for (unsigned a = 0; a <= 4; ++a) {
          CHECK(joint_moment(*p, static_cast<unsigned>(l.size()), a, l) == oracle::joint_expectation(ds, a, l));
          CHECK(shifted_joint_moment(*p, a, l, 2) == oracle::joint_expectation(ds, a, l, 2));
        }
    }
  }
}

TEST_CASE("egf_truncation") {
  using V = std::vector<Rational>;
  CHECK(egf_truncation(*provider("det:1"), 2) == V{1, 1, Rational::parse("1/2")});
  CHECK(egf_truncation(*provider("bernoulli:1/2"), 2) == V{1, Rational::parse("1/2"), Rational::parse("1/4")});
  CHECK(egf_truncation(*provider("poisson:1"), 0) == V{1});
}

TEST_CASE("memo tables under concurrent access") {
  auto p = provider("discrete:(0,1/3);(2,2/3)");
  auto reference = provider("discrete:(0,1/3);(2,2/3)");
  std::vector<Rational> expected;
  for (unsigned n = 0; n <= 10; ++n)
    expected.push_back(sum_moment(*reference, 4, n));

  std::vector<std::vector<Rational>> seen(4);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t)
      threads.emplace_back([&, t] {
        for (unsigned n = 0; n <= 10; ++n)
          seen[t].push_back(sum_moment(*p, 4, n));
      });
  }
  for (const auto &s : seen)
    CHECK(s == expected);
}
