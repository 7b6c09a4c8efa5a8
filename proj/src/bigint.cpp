#include "algroup/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace algroup {

namespace {

int bit_length(std::uint32_t w) {
  int n = 0;
  while (w != 0) {
    ++n;
    w >>= 1;
  }
  return n;
}

}  // namespace

BigInt::BigInt(long long v) {
  neg_ = v < 0;
  // avoid overflow on LLONG_MIN
  std::uint64_t m = neg_ ? ~static_cast<std::uint64_t>(v) + 1u : static_cast<std::uint64_t>(v);
  while (m != 0) {
    mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<std::uint32_t> r(big.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  r[big.size()] = static_cast<std::uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0) - borrow;
    if (d < 0) {
      d += (1ll << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.mag_.empty()) r.neg_ = !r.neg_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.neg_ == b.neg_) {
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    r.neg_ = a.neg_;
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
      r.neg_ = a.neg_;
    } else {
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
      r.neg_ = b.neg_;
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  r.neg_ = !r.mag_.empty() && (a.neg_ != b.neg_);
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quo, BigInt& rem) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  quo = BigInt();
  rem = BigInt();
  if (a.is_zero()) return;
  // shift-subtract long division on magnitudes
  std::vector<std::uint32_t> q(a.mag_.size(), 0);
  std::vector<std::uint32_t> r;
  int total_bits = 32 * static_cast<int>(a.mag_.size() - 1) + bit_length(a.mag_.back());
  for (int bit = total_bits - 1; bit >= 0; --bit) {
    // r = (r << 1) | bit(a, bit)
    std::uint32_t carry = (a.mag_[bit / 32] >> (bit % 32)) & 1u;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint32_t nxt = r[i] >> 31;
      r[i] = (r[i] << 1) | carry;
      carry = nxt;
    }
    if (carry != 0) r.push_back(carry);
    if (cmp_mag(r, b.mag_) >= 0) {
      r = sub_mag(r, b.mag_);
      q[bit / 32] |= (1u << (bit % 32));
    }
  }
  quo.mag_ = std::move(q);
  quo.trim();
  quo.neg_ = !quo.mag_.empty() && (a.neg_ != b.neg_);
  rem.mag_ = std::move(r);
  rem.trim();
  rem.neg_ = !rem.mag_.empty() && a.neg_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
  BigInt r(1), b = base;
  while (exp != 0) {
    if (exp & 1u) r = r * b;
    b = b * b;
    exp >>= 1;
  }
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.neg_ == b.neg_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  int sa = a.signum(), sb = b.signum();
  if (sa != sb) return sa <=> sb;
  int c = BigInt::cmp_mag(a.mag_, b.mag_);
  if (sa < 0) c = -c;
  return c <=> 0;
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    // divide magnitude by 10^9, collecting the remainder
    std::uint64_t rem = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out;
  if (neg_) out.push_back('-');
  out.append(digits.rbegin(), digits.rend());
  return out;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  std::uint64_t v = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
  if (neg_) return v <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1u;
  return v <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max());
}

long long BigInt::as_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: value out of int64 range");
  std::uint64_t v = 0;
  for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
  return neg_ ? -static_cast<long long>(v) : static_cast<long long>(v);
}

}  // namespace algroup
