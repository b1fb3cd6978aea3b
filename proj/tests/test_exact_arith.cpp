#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "oracles.hpp"
#include "stirsum/combinatorics.hpp"
#include "stirsum/exact_int.hpp"
#include "stirsum/exact_rational.hpp"
#include "stirsum/polynomial.hpp"
#include "stirsum/stirling.hpp"

using namespace stirsum;

namespace {

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (m > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  return neg ? "-" + s : s;
}

IntPolynomial ip(std::initializer_list<std::int64_t> c) {
  std::vector<ExactInt> v;
  for (auto x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

}  // namespace

TEST_CASE("ExactInt basics") {
  CHECK(ExactInt().sign() == 0);
  CHECK(ExactInt(0).is_zero());
  CHECK(ExactInt(-0) == ExactInt());
  CHECK(ExactInt::parse("-0").sign() == 0);
  CHECK(ExactInt::parse("-123").to_string() == "-123");
  CHECK(ExactInt(5) - ExactInt(7) == ExactInt(-2));
  CHECK(ExactInt(-3) < ExactInt(2));
  CHECK(ExactInt(-17).abs() == ExactInt(17));
  CHECK(pow(ExactInt(2), 100).to_string() == "1267650600228229401496703205376");
  CHECK(gcd(ExactInt(-12), ExactInt(18)) == ExactInt(6));
  CHECK(gcd(ExactInt(0), ExactInt(0)) == ExactInt(0));

  const DivMod qr = divmod(ExactInt(-7), ExactInt(2));
  CHECK(qr.quotient == ExactInt(-3));
  CHECK(qr.remainder == ExactInt(-1));

  CHECK(divide_exact(ExactInt(91), ExactInt(7)) == ExactInt(13));
  CHECK_THROWS_AS(divide_exact(ExactInt(10), ExactInt(3)), std::domain_error);
  CHECK_THROWS_AS(divmod(ExactInt(1), ExactInt(0)), std::domain_error);

  for (const char* bad : {"", "-", "+5", "12a", " 1", "1.0"}) {
    CHECK_THROWS_AS(ExactInt::parse(bad), std::invalid_argument);
  }

  const ExactInt big = pow(ExactInt(10), 30);
  CHECK_FALSE(big.fits_int64());
  CHECK_THROWS_AS(static_cast<void>(big.to_int64()), std::overflow_error);
  CHECK(ExactInt(std::numeric_limits<std::int64_t>::min()).to_int64() == std::numeric_limits<std::int64_t>::min());
}

TEST_CASE("ExactInt agrees with __int128 around the 64-bit word boundary") {
  std::mt19937_64 rng(20261018);
  const __int128 edges[] = {
      0, 1, -1,
      static_cast<__int128>(std::numeric_limits<std::int64_t>::max()),
      static_cast<__int128>(std::numeric_limits<std::int64_t>::min()),
      static_cast<__int128>(std::numeric_limits<std::uint64_t>::max()),
      static_cast<__int128>(1) << 32,
      -(static_cast<__int128>(1) << 32),
  };
  std::uniform_int_distribution<int> jitter(-3, 3);
  std::uniform_int_distribution<int> pick(0, std::size(edges) - 1);
  std::uniform_int_distribution<std::int64_t> small(-(1LL << 31), 1LL << 31);

  auto to_exact = [](__int128 v) { return ExactInt::parse(i128_to_string(v)); };

  for (int iter = 0; iter < 20000; ++iter) {
    const __int128 a = edges[pick(rng)] + jitter(rng) + (iter % 2 ? small(rng) : 0);
    const __int128 b = edges[pick(rng)] + jitter(rng);
    const ExactInt ea = to_exact(a);
    const ExactInt eb = to_exact(b);
    REQUIRE(ea.to_string() == i128_to_string(a));
    CHECK((ea + eb).to_string() == i128_to_string(a + b));
    CHECK((ea - eb).to_string() == i128_to_string(a - b));
    CHECK(ea.fits_int64() == (a >= std::numeric_limits<std::int64_t>::min() &&
                              a <= std::numeric_limits<std::int64_t>::max()));
    CHECK(((ea <=> eb) < 0) == (a < b));
    // keep the product inside __int128
    const __int128 c = static_cast<__int128>(static_cast<std::int64_t>(a >> 1));
    const __int128 d = small(rng);
    CHECK((to_exact(c) * to_exact(d)).to_string() == i128_to_string(c * d));
    if (b != 0) {
      const DivMod qr = divmod(ea, eb);
      CHECK(qr.quotient.to_string() == i128_to_string(a / b));
      CHECK(qr.remainder.to_string() == i128_to_string(a % b));
    }
  }
}

TEST_CASE("exactness: a + b - b == a") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const ExactInt a = pow(ExactInt(static_cast<std::int64_t>(rng() % 1000) - 500), rng() % 40);
    const ExactInt b = pow(ExactInt(static_cast<std::int64_t>(rng() % 1000) - 500), rng() % 40);
    CHECK(a + b - b == a);
  }
}

TEST_CASE("ExactRational normalizes eagerly") {
  const ExactRational half(ExactInt(2), ExactInt(4));
  CHECK(half.numerator() == ExactInt(1));
  CHECK(half.denominator() == ExactInt(2));
  CHECK(ExactRational(ExactInt(3), ExactInt(-6)) == ExactRational(ExactInt(-1), ExactInt(2)));
  CHECK(ExactRational(ExactInt(0), ExactInt(-5)).denominator() == ExactInt(1));
  CHECK(ExactRational(ExactInt(6), ExactInt(3)).to_string() == "2");
  CHECK(ExactRational(ExactInt(-5), ExactInt(15)).to_string() == "-1/3");
  CHECK(ExactRational::parse("10/4") == ExactRational(ExactInt(5), ExactInt(2)));
  CHECK(ExactRational::parse("-7") == ExactRational(-7));
  CHECK_THROWS_AS(ExactRational(ExactInt(1), ExactInt(0)), std::domain_error);
  CHECK_THROWS_AS(ExactRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExactRational(1) / ExactRational(0), std::domain_error);
  CHECK(ExactRational(ExactInt(1), ExactInt(3)) < ExactRational(ExactInt(1), ExactInt(2)));
}

TEST_CASE("ExactRational: (a/b + c/d) - c/d == a/b structurally") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const ExactRational x = oracle::random_rational(rng);
    const ExactRational y = oracle::random_rational(rng);
    const ExactRational back = (x + y) - y;
    CHECK(back == x);
    CHECK(back.numerator() == x.numerator());
    CHECK(back.denominator() == x.denominator());
    CHECK(gcd(back.numerator(), back.denominator()) == ExactInt(1));
    CHECK(back.denominator().sign() > 0);
    if (y.sign() != 0) CHECK((x * y) / y == x);
    CHECK(ExactRational::parse(x.to_string()) == x);
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == ExactInt(1));
  CHECK(factorial(7) == ExactInt(5040));
  CHECK(factorial(20) == ExactInt(oracle::factorial_u64(20)));
  CHECK(factorial(20).to_string() == "2432902008176640000");
  for (int n = 0; n <= 20; ++n) CHECK(factorial(n) == ExactInt(oracle::factorial_u64(n)));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("binomial against Pascal's triangle") {
  const auto pascal = oracle::pascal_triangle(60);
  CHECK(binomial(5, 0) == ExactInt(1));
  CHECK(pascal[12][6] == ExactInt(924));
  CHECK(binomial(12, 6) == ExactInt(924));
  CHECK(binomial(3, 5) == ExactInt(0));
  CHECK(binomial(3, -1) == ExactInt(0));
  CHECK(binomial(0, 0) == ExactInt(1));
  CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
  for (int n = 0; n <= 60; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  }
  // Pascal's rule on the implementation itself
  for (int n = 1; n <= 60; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST_CASE("falling and rising factorial polynomials") {
  CHECK(falling_factorial_poly(0) == ip({1}));
  CHECK(falling_factorial_poly(2) == ip({0, -1, 1}));
  CHECK(falling_factorial_poly(3) == ip({0, 2, -3, 1}));
  CHECK(rising_factorial_poly(0) == ip({1}));
  CHECK(rising_factorial_poly(2) == ip({0, 1, 1}));
  CHECK(rising_factorial_poly(3) == ip({0, 2, 3, 1}));

  for (unsigned p = 0; p <= 8; ++p) {
    std::vector<std::int64_t> falling_roots;
    std::vector<std::int64_t> rising_roots;
    for (std::int64_t j = 0; j < p; ++j) {
      falling_roots.push_back(-j);
      rising_roots.push_back(j);
    }
    const auto falling = oracle::expand_linear_factors(falling_roots);
    const auto rising = oracle::expand_linear_factors(rising_roots);
    REQUIRE(falling_factorial_poly(p).degree() == p);
    for (std::size_t i = 0; i <= p; ++i) {
      CHECK(falling_factorial_poly(p).coeff(i) == ExactInt(falling[i]));
      CHECK(rising_factorial_poly(p).coeff(i) == ExactInt(rising[i]));
    }
  }
}

TEST_CASE("poly_shift") {
  CHECK(poly_shift(ip({0, 1}), ExactInt(5)) == ip({5, 1}));
  CHECK(poly_shift(ip({0, 0, 1}), ExactInt(1)) == ip({1, 2, 1}));
  const IntPolynomial q = ip({0, -1, 1});
  const IntPolynomial shifted = poly_shift(q, ExactInt(2));
  CHECK(shifted == ip({2, 3, 1}));
  for (std::int64_t x = 0; x <= 3; ++x) CHECK(shifted.evaluate(ExactInt(x)) == q.evaluate(ExactInt(x + 2)));
  CHECK(poly_shift(IntPolynomial(), ExactInt(9)).is_zero());

  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::int64_t> c(1 + rng() % 6);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 21) - 10;
    const std::int64_t shift = static_cast<std::int64_t>(rng() % 11) - 5;
    std::vector<ExactInt> ec(c.begin(), c.end());
    const IntPolynomial s = poly_shift(IntPolynomial(ec), ExactInt(shift));
    for (std::int64_t x = -3; x <= 3; ++x) CHECK(s.evaluate(ExactInt(x)) == ExactInt(oracle::eval_i64(c, x + shift)));
  }
}

TEST_CASE("[x+p]_{p+1} equals [x]^{p+1} and rising coefficients are cycle numbers") {
  for (unsigned p = 0; p <= 30; ++p) {
    CHECK(poly_shift(falling_factorial_poly(p + 1), ExactInt(p)) == rising_factorial_poly(p + 1));
    const IntPolynomial rising = rising_factorial_poly(p);
    for (unsigned t = 0; t <= p; ++t) CHECK(rising.coeff(t) == stirling(p, t));
  }
}

TEST_CASE("Polynomial keeps the zero polynomial canonical") {
  const IntPolynomial z(std::vector<ExactInt>{ExactInt(0), ExactInt(0)});
  CHECK(z.is_zero());
  CHECK(z.degree() == 0);
  CHECK(ip({1, 2}) - ip({1, 2}) == IntPolynomial());
  CHECK((ip({1, 1}) * ip({-1, 1})) == ip({-1, 0, 1}));
  CHECK(to_string(ip({0, -1, 1})) == "0, -1, 1");
}
