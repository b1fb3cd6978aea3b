#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <thread>

#include "oracles.hpp"
#include "stirsum/combinatorics.hpp"
#include "stirsum/harmonic.hpp"

using namespace stirsum;

namespace {

ExactRational q(std::int64_t num, std::int64_t den = 1) { return ExactRational(ExactInt(num), ExactInt(den)); }

}  // namespace

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == q(1));
  CHECK(harmonic(3) == q(11, 6));
  CHECK(harmonic(6) == q(49, 20));
  for (int k = 1; k <= 20; ++k) {
    const auto ref = oracle::harmonic_i64(k);
    CHECK(harmonic(k) == q(ref.num, ref.den));
  }
  for (int k = 2; k <= 80; ++k) CHECK(harmonic(k) - harmonic(k - 1) == q(1, k));
  for (int k = 1; k <= 50; ++k) {
    CHECK(divmod(oracle::lcm_upto(k), harmonic(k).denominator()).remainder.is_zero());
  }
  CHECK_THROWS_AS(harmonic(0), std::domain_error);
  CHECK_THROWS_AS(harmonic(-4), std::domain_error);
}

TEST_CASE("harmonic table under concurrent access") {
  HarmonicTable table;
  std::vector<ExactRational> got(6);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < 6; ++w) {
      pool.emplace_back([&, w] {
        for (int k = 1; k <= 120; k += w + 1) static_cast<void>(table.at(k));
        got[w] = table.at(100);
      });
    }
  }
  for (const auto& g : got) CHECK(g == harmonic(100));
}

TEST_CASE("summation by parts combinator") {
  SequencePair ones{{q(1), q(1), q(1)}, {q(1), q(1), q(1)}};
  const VerificationReport r = abel_summation_check(ones);
  CHECK(r.passed());
  CHECK(r.cases_checked == 1);
  CHECK(ones.partial_u() == std::vector<ExactRational>{q(0), q(1), q(2), q(3)});

  CHECK(abel_summation_check(binomial_harmonic_pair(1, 3)).passed());

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 8);
  for (int iter = 0; iter < 300; ++iter) {
    SequencePair pair;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      pair.u.push_back(oracle::random_rational(rng));
      pair.v.push_back(oracle::random_rational(rng));
    }
    CHECK(abel_summation_check(pair).passed());
  }

  SequencePair uneven{{q(1), q(2)}, {q(1)}};
  CHECK_THROWS_AS(abel_summation_check(uneven), std::domain_error);
  CHECK_THROWS_AS(abel_summation_check(SequencePair{}), std::domain_error);
}

TEST_CASE("summation by parts catches a wrong right side") {
  // Dropping the U_{k-1} term must break the equality for non-trivial input.
  SequencePair pair{{q(1), q(2)}, {q(3), q(5)}};
  const auto big_u = pair.partial_u();
  const auto big_v = pair.partial_v();
  ExactRational partial(0);
  for (std::size_t k = 1; k <= 2; ++k) partial += pair.u[k - 1] * big_v[k];
  CHECK(partial != big_u[2] * big_v[2]);
}

TEST_CASE("summation by parts with binomial and reciprocal sequences") {
  for (int p = 0; p <= 8; ++p) {
    for (int n = 1; n <= 50; n += 7) {
      const VerificationReport r = check_abel_instantiation(p, n);
      CHECK(r.passed());
      CHECK(r.cases_checked == static_cast<std::uint64_t>(n + 2));
    }
  }
}

TEST_CASE("identity evaluators") {
  CHECK(identity1_lhs(0, 1) == q(1));
  CHECK(identity1_lhs(0, 3) == q(13, 3));
  // C(3,2) H_1 + C(4,2) H_2 + C(5,2) H_3 + C(6,2) H_4
  CHECK(identity1_lhs(2, 4) == q(3) + q(6) * q(3, 2) + q(10) * q(11, 6) + q(15) * q(25, 12));
  CHECK(identity1_lhs(2, 4) == q(739, 12));

  CHECK(identity1_rhs(0, 1) == q(1));
  CHECK(identity1_rhs(1, 2) == identity1_lhs(1, 2));
  CHECK(identity1_rhs(3, 5) == identity1_lhs(3, 5));

  CHECK(identity2_rhs(0, 1) == q(1));
  CHECK(identity2_rhs(0, 3) == q(13, 3));
  CHECK(identity2_rhs(2, 6) == identity1_lhs(2, 6));

  CHECK_THROWS_AS(identity1_lhs(0, 0), std::domain_error);
  CHECK_THROWS_AS(identity1_rhs(-1, 3), std::domain_error);
  CHECK_THROWS_AS(identity2_rhs(1, 0), std::domain_error);
}

TEST_CASE("identities over a rectangle, plus the reciprocal-binomial step") {
  for (int p = 0; p <= 6; ++p) {
    for (int n = 1; n <= 30; ++n) {
      CHECK(check_identity1(p, n).passed());
      CHECK(check_identity2(p, n).passed());
      CHECK(check_reciprocal_binomial_sum(p, n).passed());
    }
  }
}

TEST_CASE("deriving the Stirling recursion from the two identities") {
  for (auto [p, n] : {std::pair{0, 1}, std::pair{4, 10}, std::pair{8, 25}}) {
    const VerificationReport r = derive_eq2_from_identities(p, n);
    CHECK(r.cases_checked == 3);
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(derive_eq2_from_identities(0, 0), std::domain_error);
}
