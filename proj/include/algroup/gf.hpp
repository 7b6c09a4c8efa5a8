#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace algroup {

// Description of F_q = F_{p^e}. The modulus is a monic irreducible polynomial
// of degree e over F_p, coefficients listed low degree first (length e+1).
// When empty, the built-in modulus for (p, e) is used.
struct FieldSpec {
  int p = 2;
  int e = 1;
  std::vector<int> modulus;
};

// Arithmetic in F_q with q <= 256. Elements are packed polynomial-basis
// values: a = sum c_i * x^i is stored as the integer sum c_i * p^i, so the
// prime subfield occupies the values 0..p-1 and 0/1 are the field's 0/1.
// All operations are table lookups; the object is immutable after
// construction and safe to share across threads.
class Field {
 public:
  using elt = std::uint8_t;

  explicit Field(FieldSpec spec);
  static Field make(int p, int e);

  int p() const { return spec_.p; }
  int e() const { return spec_.e; }
  int q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  elt add(elt a, elt b) const { return add_[idx(a, b)]; }
  elt sub(elt a, elt b) const { return add_[idx(a, neg_[b])]; }
  elt neg(elt a) const { return neg_[a]; }
  elt mul(elt a, elt b) const { return mul_[idx(a, b)]; }
  elt inv(elt a) const;  // throws std::domain_error on 0

  // Absolute trace Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^(e-1)}, in [0, p).
  int trace(elt a) const { return trace_[a]; }
  // Exponent k with psi(a) = zeta_p^k for the fixed additive character
  // psi = zeta_p ^ trace.
  int psi_exponent(elt a) const { return trace_[a]; }

  // Packed literal in [0, q); validates the range.
  elt of_packed(long long v) const;
  // Integer residue embedded in the prime subfield.
  elt of_residue(long long v) const;

  std::vector<int> coeffs(elt a) const;          // digits base p, length e
  elt pack(const std::vector<int>& coeffs) const;

  bool same_as(const Field& o) const { return spec_.p == o.spec_.p && spec_.e == o.spec_.e && spec_.modulus == o.spec_.modulus; }

 private:
  FieldSpec spec_;
  int q_ = 0;
  std::vector<elt> add_, mul_, neg_, inv_;
  std::vector<int> trace_;

  std::size_t idx(elt a, elt b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }
};

// Built-in modulus for p^e <= 16 (Conway polynomials for e >= 2); throws for
// other extensions, where a user-supplied modulus is required.
std::vector<int> builtin_modulus(int p, int e);

}  // namespace algroup
