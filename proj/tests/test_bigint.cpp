#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algroup/bigint.hpp"
#include "algroup/rational.hpp"

using namespace algroup;

TEST_CASE("small values round-trip") {
  CHECK(BigInt(0).str() == "0");
  CHECK(BigInt(-1).str() == "-1");
  CHECK(BigInt(1000000007).str() == "1000000007");
  CHECK(BigInt(-123456789012345678LL).str() == "-123456789012345678");
  CHECK(BigInt(42).as_int64() == 42);
}

TEST_CASE("arithmetic matches 64-bit oracle on random operands") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    long long a = static_cast<long long>(rng() % 2000001) - 1000000;
    long long b = static_cast<long long>(rng() % 2000001) - 1000000;
    CHECK((BigInt(a) + BigInt(b)).as_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).as_int64() == a - b);
    CHECK((BigInt(a) * BigInt(b)).as_int64() == a * b);
    if (b != 0) {
      CHECK((BigInt(a) / BigInt(b)).as_int64() == a / b);
      CHECK((BigInt(a) % BigInt(b)).as_int64() == a % b);
    }
  }
}

TEST_CASE("division invariant a = q*b + r with |r| < |b|") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    BigInt a = BigInt(static_cast<long long>(rng())) * BigInt(static_cast<long long>(rng() % 1000));
    BigInt b(static_cast<long long>(rng() % 999983) + 1);
    if (rng() & 1) a = -a;
    if (rng() & 1) b = -b;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
  }
}

TEST_CASE("multiplication grows past 64 bits exactly") {
  BigInt big = BigInt::pow(BigInt(10), 25);
  CHECK(big.str() == "10000000000000000000000000");
  CHECK(!big.fits_int64());
  CHECK((big / BigInt::pow(BigInt(10), 20)).as_int64() == 100000);
}

TEST_CASE("gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)).as_int64() == 6);
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)).as_int64() == 6);
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)).as_int64() == 5);
  CHECK(BigInt::gcd(BigInt(7), BigInt(0)).as_int64() == 7);
}

TEST_CASE("rational normalization and arithmetic") {
  Rational half(BigInt(2), BigInt(4));
  CHECK(half.numerator().as_int64() == 1);
  CHECK(half.denominator().as_int64() == 2);
  CHECK(half.str() == "1/2");
  CHECK((half + half).str() == "1");
  CHECK((half - half).is_zero());
  CHECK((half * Rational(4)).str() == "2");
  CHECK((Rational(1) / Rational(3)).str() == "1/3");
  CHECK(Rational(BigInt(3), BigInt(-6)).str() == "-1/2");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random operands") {
  std::mt19937_64 rng(23);
  auto rnd = [&] {
    return Rational(BigInt(static_cast<long long>(rng() % 201) - 100),
                    BigInt(static_cast<long long>(rng() % 40) + 1));
  };
  for (int iter = 0; iter < 500; ++iter) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("rational ordering") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(-1) < Rational(BigInt(1), BigInt(1000)));
}
