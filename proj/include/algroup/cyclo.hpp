#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algroup/rational.hpp"

namespace algroup {

// Exact element of Q(zeta_p) for prime p, stored on the power basis
// {1, z, ..., z^(p-2)} after reduction mod Phi_p(z) = 1 + z + ... + z^(p-1).
// Canonical form is unique, so equality is coefficient equality.
class Cyclotomic {
 public:
  explicit Cyclotomic(int p);  // zero
  static Cyclotomic from_rational(int p, Rational r);
  static Cyclotomic integer(int p, long long v) { return from_rational(p, Rational(v)); }
  static Cyclotomic root_of_unity(int p, long long k);
  // sum over k of counts[k] * zeta^k; counts has length p
  static Cyclotomic from_root_counts(int p, const std::vector<long long>& counts);

  int p() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_nonnegative_integer() const;
  // the value as a rational; throws std::domain_error when not rational
  Rational rational_value() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }

  Cyclotomic scaled(const Rational& r) const;
  Cyclotomic conjugate() const;  // z -> z^(-1), complex conjugation

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  // "a0 + a1*z + a2*z^2" with rationals printed as num/den; "0" when zero.
  std::string str() const;

 private:
  int p_;
  std::vector<Rational> c_;  // length p-1

  static void check_same(const Cyclotomic& a, const Cyclotomic& b);
};

}  // namespace algroup
