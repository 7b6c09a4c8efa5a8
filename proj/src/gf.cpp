#include "algroup/gf.hpp"

#include <stdexcept>

namespace algroup {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, low degree first, trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// remainder of a modulo monic m
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int shift = static_cast<int>(a.size()) - 1 - dm;
    int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

// exhaustive trial division by all monic polynomials of degree 1..deg/2
bool is_irreducible(const Poly& m, int p) {
  int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      long long v = idx;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(v % p);
        v /= p;
      }
      div[d] = 1;  // monic
      if (poly_is_zero(poly_mod(m, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> builtin_modulus(int p, int e) {
  if (e == 1) return {0, 1};  // plain x; reduction never occurs for e = 1
  if (p == 2 && e == 2) return {1, 1, 1};
  if (p == 2 && e == 3) return {1, 1, 0, 1};
  if (p == 2 && e == 4) return {1, 1, 0, 0, 1};
  if (p == 3 && e == 2) return {2, 2, 1};
  throw std::invalid_argument("no built-in modulus for p=" + std::to_string(p) +
                              ", e=" + std::to_string(e) +
                              "; supply one explicitly");
}

Field Field::make(int p, int e) { return Field(FieldSpec{p, e, {}}); }

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw std::invalid_argument("field: p must be prime, got " + std::to_string(spec_.p));
  if (spec_.e < 1) throw std::invalid_argument("field: e must be >= 1");
  long long q = 1;
  for (int i = 0; i < spec_.e; ++i) {
    q *= spec_.p;
    if (q > 256) throw std::invalid_argument("field: q = p^e exceeds the supported limit 256");
  }
  q_ = static_cast<int>(q);
  if (spec_.modulus.empty()) spec_.modulus = builtin_modulus(spec_.p, spec_.e);
  for (int& c : spec_.modulus) c = ((c % spec_.p) + spec_.p) % spec_.p;
  if (static_cast<int>(spec_.modulus.size()) != spec_.e + 1 || spec_.modulus.back() != 1)
    throw std::invalid_argument("field: modulus must be monic of degree e");
  if (spec_.e >= 2 && !is_irreducible(spec_.modulus, spec_.p))
    throw std::invalid_argument("field: modulus is reducible over F_p");

  const int p = spec_.p, e = spec_.e;
  auto unpack = [&](int v) {
    Poly c(e, 0);
    for (int i = 0; i < e; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  };
  auto pack_poly = [&](const Poly& c) {
    int v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return static_cast<elt>(v);
  };

  neg_.resize(q_);
  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  for (int a = 0; a < q_; ++a) {
    Poly ca = unpack(a);
    Poly nc(e, 0);
    for (int i = 0; i < e; ++i) nc[i] = (p - ca[i]) % p;
    neg_[a] = pack_poly(nc);
    for (int b = 0; b < q_; ++b) {
      Poly cb = unpack(b);
      Poly sum(e, 0);
      for (int i = 0; i < e; ++i) sum[i] = (ca[i] + cb[i]) % p;
      add_[idx(static_cast<elt>(a), static_cast<elt>(b))] = pack_poly(sum);
      Poly prod = poly_mod(poly_mul(ca, cb, p), spec_.modulus, p);
      prod.resize(e, 0);
      mul_[idx(static_cast<elt>(a), static_cast<elt>(b))] = pack_poly(prod);
    }
  }

  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[idx(static_cast<elt>(a), static_cast<elt>(b))] == 1) {
        inv_[a] = static_cast<elt>(b);
        break;
      }
    }
    if (inv_[a] == 0) throw std::logic_error("field: element without inverse (modulus not irreducible?)");
  }

  trace_.resize(q_);
  bool surjective = false;
  for (int a = 0; a < q_; ++a) {
    elt frob = static_cast<elt>(a);
    elt acc = static_cast<elt>(a);
    for (int i = 1; i < e; ++i) {
      // frob <- frob^p
      elt t = 1;
      for (int k = 0; k < p; ++k) t = mul_[idx(t, frob)];
      frob = t;
      acc = add_[idx(acc, frob)];
    }
    if (acc >= p) throw std::logic_error("field: trace landed outside the prime subfield");
    trace_[a] = acc;
    if (acc != 0) surjective = true;
  }
  if (!surjective) throw std::logic_error("field: trace is identically zero");
}

Field::elt Field::inv(elt a) const {
  if (a == 0) throw std::domain_error("field: inverse of zero");
  return inv_[a];
}

Field::elt Field::of_packed(long long v) const {
  if (v < 0 || v >= q_)
    throw std::invalid_argument("field element literal " + std::to_string(v) +
                                " out of range [0, " + std::to_string(q_) + ")");
  return static_cast<elt>(v);
}

Field::elt Field::of_residue(long long v) const {
  long long r = ((v % spec_.p) + spec_.p) % spec_.p;
  return static_cast<elt>(r);
}

std::vector<int> Field::coeffs(elt a) const {
  std::vector<int> c(spec_.e, 0);
  int v = a;
  for (int i = 0; i < spec_.e; ++i) {
    c[i] = v % spec_.p;
    v /= spec_.p;
  }
  return c;
}

Field::elt Field::pack(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > spec_.e)
    throw std::invalid_argument("field: too many coefficients");
  int v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    int c = ((coeffs[i] % spec_.p) + spec_.p) % spec_.p;
    v = v * spec_.p + c;
  }
  return static_cast<elt>(v);
}

}  // namespace algroup
