#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace algroup {

// Signed arbitrary-precision integer. Magnitude is base-2^32, little endian,
// with no leading zero words; the empty magnitude is zero.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  int signum() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }
  bool is_zero() const { return mag_.empty(); }
  bool is_negative() const { return neg_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncating division: quo = trunc(a/b), rem = a - quo*b (rem keeps the
  // sign of a). Division by zero throws std::domain_error.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& quo, BigInt& rem);
  static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
  static BigInt pow(const BigInt& base, unsigned exp);

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  std::string str() const;
  bool fits_int64() const;
  long long as_int64() const;  // throws std::overflow_error if out of range

 private:
  bool neg_ = false;                  // meaningful only when mag_ nonempty
  std::vector<std::uint32_t> mag_;

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

}  // namespace algroup
