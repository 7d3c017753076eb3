#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tncalc/exact.hpp"

using namespace tncalc;

TEST_CASE("binomial small values and conventions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(52, 26) == Integer("495918532948104"));
}

TEST_CASE("binomial matches Pascal rule") {
  for (unsigned long n = 1; n <= 40; ++n)
    for (long k = 0; k <= static_cast<long>(n); ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("pow_conv conventions") {
  CHECK(pow_conv(Rational(0), 0) == 1);
  CHECK(pow_conv(Integer(0), 0) == 1);
  CHECK(pow_conv(make_rational(3, 2), 2) == make_rational(9, 4));
  CHECK(pow_conv(Rational(-2), 3) == -8);
  CHECK(pow_conv(Rational(0), 5) == 0);
}

TEST_CASE("falling product equals factorial ratio") {
  for (unsigned long n = 0; n <= 30; ++n)
    for (unsigned long k = 0; k <= n; ++k)
      CHECK(falling_product(n, k) * factorial(k) == factorial(n));
  CHECK_THROWS_AS(falling_product(3, 4), std::domain_error);
}

TEST_CASE("make_rational canonicalizes") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  for (int i = 0; i < 200; ++i) {
    long s = (rng() % 2) ? 1 : -1;
    Rational r = make_rational(Integer(num(rng)), Integer(s * den(rng)));
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    CHECK(r.get_den() > 0);
    CHECK((g == 1 || r.get_num() == 0));
  }
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("parse_rational accepts sign, digits, optional denominator") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-0") == 0);
  CHECK(parse_rational("+7/14") == make_rational(1, 2));
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK_THROWS_AS(parse_rational("abc"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), parse_error);
  CHECK_THROWS_AS(parse_rational("1.5"), parse_error);
}

TEST_CASE("canonical printing") {
  CHECK(to_string(make_rational(4, 2)) == "2");
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(Integer(-17)) == "-17");
}

TEST_CASE("parse/print round trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 99);
  for (int i = 0; i < 200; ++i) {
    Rational r = make_rational(Integer(num(rng)), Integer(den(rng)));
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("to_integer") {
  CHECK(to_integer(Rational(42)) == 42);
  CHECK_THROWS_AS(to_integer(make_rational(1, 2)), std::domain_error);
}
