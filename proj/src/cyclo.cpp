#include "algroup/cyclo.hpp"

#include <stdexcept>

namespace algroup {

Cyclotomic::Cyclotomic(int p) : p_(p) {
  if (p < 2) throw std::invalid_argument("cyclotomic: p must be a prime >= 2");
  c_.assign(p - 1, Rational());
}

void Cyclotomic::check_same(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.p_ != b.p_)
    throw std::domain_error("cyclotomic: mixed roots of unity (p=" +
                            std::to_string(a.p_) + " vs p=" + std::to_string(b.p_) + ")");
}

Cyclotomic Cyclotomic::from_rational(int p, Rational r) {
  Cyclotomic x(p);
  x.c_[0] = std::move(r);
  return x;
}

Cyclotomic Cyclotomic::root_of_unity(int p, long long k) {
  k %= p;
  if (k < 0) k += p;
  Cyclotomic x(p);
  if (k <= p - 2) {
    x.c_[k] = Rational(1);
  } else {
    // z^(p-1) = -(1 + z + ... + z^(p-2))
    for (auto& c : x.c_) c = Rational(-1);
  }
  return x;
}

Cyclotomic Cyclotomic::from_root_counts(int p, const std::vector<long long>& counts) {
  if (static_cast<int>(counts.size()) != p)
    throw std::invalid_argument("cyclotomic: counts must have length p");
  Cyclotomic x(p);
  for (int k = 0; k + 1 < p; ++k) x.c_[k] = Rational(counts[k] - counts[p - 1]);
  return x;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

bool Cyclotomic::is_nonnegative_integer() const {
  return is_rational() && c_[0].is_integer() && !c_[0].is_negative();
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic: value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::check_same(a, b);
  Cyclotomic r = a;
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::check_same(a, b);
  const int p = a.p_;
  // accumulate on exponents 0..p-1, then fold z^(p-1) back into the basis
  std::vector<Rational> acc(p, Rational());
  for (int i = 0; i + 1 < p; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j + 1 < p; ++j) {
      if (b.c_[j].is_zero()) continue;
      acc[(i + j) % p] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic r(p);
  for (int k = 0; k + 1 < p; ++k) r.c_[k] = acc[k] - acc[p - 1];
  return r;
}

Cyclotomic Cyclotomic::scaled(const Rational& s) const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> acc(p_, Rational());
  for (int k = 0; k + 1 < p_; ++k) acc[(p_ - k) % p_] += c_[k];
  Cyclotomic r(p_);
  for (int k = 0; k + 1 < p_; ++k) r.c_[k] = acc[k] - acc[p_ - 1];
  return r;
}

std::string Cyclotomic::str() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    Rational coeff = c_[k];
    bool negative = coeff.is_negative();
    Rational mag = negative ? -coeff : coeff;
    std::string term;
    if (k == 0) {
      term = mag.str();
    } else {
      std::string power = (k == 1) ? "z" : "z^" + std::to_string(k);
      term = (mag == Rational(1)) ? power : mag.str() + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace algroup
