#include <doctest.h>

#include <random>

#include "atgp/rational.hpp"

using atgp::BigInt;
using atgp::Rational;

TEST_CASE("rational normalization invariants") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    long long a = static_cast<long long>(rng() % 2001) - 1000;
    long long b = static_cast<long long>(rng() % 2000) - 1000;
    if (b == 0) b = 7;
    Rational q{BigInt(a), BigInt(b)};
    CHECK(q.denominator() > 0);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(q.numerator()),
                                     q.denominator()) == 1);
  }
}

TEST_CASE("arithmetic is exact") {
  Rational third(BigInt(1), BigInt(3));
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1) / Rational(10) * Rational(10) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("parse accepts integers, fractions and exact decimals") {
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-7/3") == Rational(BigInt(-7), BigInt(3)));
  CHECK(Rational::parse("2.5") == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::parse("-0.125") == Rational(BigInt(-1), BigInt(8)));
  CHECK(Rational::parse("0.1") == Rational(BigInt(1), BigInt(10)));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK_FALSE(Rational::try_parse(""));
  CHECK_FALSE(Rational::try_parse("1/0"));
  CHECK_FALSE(Rational::try_parse("abc"));
  CHECK_FALSE(Rational::try_parse("1.2.3"));
}

TEST_CASE("to_string round-trips bit-exactly") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    long long a = static_cast<long long>(rng() % 100000) - 50000;
    long long b = 1 + static_cast<long long>(rng() % 999);
    Rational q{BigInt(a), BigInt(b)};
    CHECK(Rational::parse(q.to_string()) == q);
  }
}

TEST_CASE("from_double is the exact binary value") {
  CHECK(Rational::from_double(2.5) == Rational(BigInt(5), BigInt(2)));
  CHECK(Rational::from_double(-0.75) == Rational(BigInt(-3), BigInt(4)));
  // 0.1 is not representable; the conversion reflects the double, not the text
  CHECK(Rational::from_double(0.1) != Rational(BigInt(1), BigInt(10)));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("decimal rendering is exact and truncating") {
  CHECK(Rational::parse("5/2").to_decimal(4) == "2.5");
  CHECK(Rational::parse("1/3").to_decimal(4) == "0.3333");
  CHECK(Rational::parse("-8").to_decimal(4) == "-8");
  CHECK(Rational::parse("-1/8").to_decimal(2) == "-0.12");
  CHECK(Rational(0).to_decimal(4) == "0");
}
