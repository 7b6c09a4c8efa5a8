#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algroup/cyclo.hpp"

using namespace algroup;

TEST_CASE("p = 2: zeta_2 = -1 and (-1)(-1) = 1") {
  Cyclotomic z = Cyclotomic::root_of_unity(2, 1);
  CHECK(z == Cyclotomic::integer(2, -1));
  CHECK(z * z == Cyclotomic::integer(2, 1));
}

TEST_CASE("p = 3: (1+z)(1+z^2) = 1") {
  Cyclotomic one = Cyclotomic::integer(3, 1);
  Cyclotomic a = one + Cyclotomic::root_of_unity(3, 1);
  Cyclotomic b = one + Cyclotomic::root_of_unity(3, 2);
  CHECK(a * b == one);
}

TEST_CASE("root_of_unity reduction") {
  CHECK(Cyclotomic::root_of_unity(5, 0) == Cyclotomic::integer(5, 1));
  // zeta_3^2 = -1 - zeta_3 after reduction
  Cyclotomic z2 = Cyclotomic::root_of_unity(3, 2);
  Cyclotomic expected = Cyclotomic::integer(3, -1) - Cyclotomic::root_of_unity(3, 1);
  CHECK(z2 == expected);
  // exponents reduce mod p
  CHECK(Cyclotomic::root_of_unity(3, 5) == Cyclotomic::root_of_unity(3, 2));
  CHECK(Cyclotomic::root_of_unity(3, -1) == Cyclotomic::root_of_unity(3, 2));
}

TEST_CASE("exponent addition law on all pairs, several primes") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        CHECK(Cyclotomic::root_of_unity(p, a) * Cyclotomic::root_of_unity(p, b) ==
              Cyclotomic::root_of_unity(p, (a + b) % p));
  }
}

TEST_CASE("structural predicates") {
  CHECK(Cyclotomic::integer(3, 1).is_rational());
  CHECK(Cyclotomic::integer(3, 1).is_nonnegative_integer());
  CHECK(!Cyclotomic::root_of_unity(3, 1).is_rational());
  CHECK(!Cyclotomic::root_of_unity(3, 1).is_nonnegative_integer());
  // zeta + zeta^2 = -1: rational but negative
  Cyclotomic s = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
  CHECK(s.is_rational());
  CHECK(s.rational_value() == Rational(-1));
  CHECK(!s.is_nonnegative_integer());
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(3, 1).rational_value(), std::domain_error);
}

TEST_CASE("conjugation") {
  CHECK(Cyclotomic::from_rational(5, Rational(BigInt(3), BigInt(7))).conjugate() ==
        Cyclotomic::from_rational(5, Rational(BigInt(3), BigInt(7))));
  for (int p : {3, 5, 7}) {
    for (int k = 0; k < p; ++k) {
      Cyclotomic z = Cyclotomic::root_of_unity(p, k);
      CHECK(z.conjugate() == Cyclotomic::root_of_unity(p, p - k));
      CHECK(z * z.conjugate() == Cyclotomic::integer(p, 1));
      CHECK(z.conjugate().conjugate() == z);
    }
  }
}

TEST_CASE("ring axioms on random small operands") {
  std::mt19937_64 rng(5);
  for (int p : {2, 3, 5}) {
    auto rnd = [&] {
      Cyclotomic x(p);
      for (int k = 0; k < p; ++k) {
        long long c = static_cast<long long>(rng() % 11) - 5;
        x += Cyclotomic::root_of_unity(p, k).scaled(Rational(c));
      }
      return x;
    };
    for (int iter = 0; iter < 200; ++iter) {
      Cyclotomic a = rnd(), b = rnd(), c = rnd();
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
      CHECK(a - a == Cyclotomic(p));
    }
  }
}

TEST_CASE("from_root_counts equals the explicit sum") {
  std::mt19937_64 rng(9);
  for (int p : {2, 3, 7}) {
    for (int iter = 0; iter < 50; ++iter) {
      std::vector<long long> counts(p, 0);
      Cyclotomic expected(p);
      for (int k = 0; k < p; ++k) {
        counts[k] = static_cast<long long>(rng() % 20);
        expected += Cyclotomic::root_of_unity(p, k).scaled(Rational(counts[k]));
      }
      CHECK(Cyclotomic::from_root_counts(p, counts) == expected);
    }
  }
}

TEST_CASE("mixed primes are rejected") {
  CHECK_THROWS_AS(Cyclotomic::integer(3, 1) + Cyclotomic::integer(5, 1), std::domain_error);
  CHECK_THROWS_AS(Cyclotomic::integer(3, 1) * Cyclotomic::integer(2, 1), std::domain_error);
}

TEST_CASE("print format") {
  CHECK(Cyclotomic(3).str() == "0");
  CHECK(Cyclotomic::integer(3, 5).str() == "5");
  CHECK(Cyclotomic::root_of_unity(3, 1).str() == "z");
  CHECK(Cyclotomic::root_of_unity(3, 2).str() == "-1 - z");
  CHECK(Cyclotomic::from_rational(3, Rational(BigInt(1), BigInt(2))).str() == "1/2");
  Cyclotomic x = Cyclotomic::integer(5, 2) + Cyclotomic::root_of_unity(5, 2).scaled(Rational(BigInt(3), BigInt(4)));
  CHECK(x.str() == "2 + 3/4*z^2");
  CHECK((-x).str() == "-2 - 3/4*z^2");
}
