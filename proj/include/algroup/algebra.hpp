#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "algroup/linalg.hpp"

namespace algroup {

// Maximal chain of ideals {0} = U_0 < U_1 < ... < U_n = J with one-dimensional
// steps, refining the chain of radical powers.
struct IdealChain {
  std::vector<Subspace> steps;
};

// Nilpotent F_q-algebra J given by structure constants: table[i][j] holds the
// coordinates of e_i * e_j. Associativity and nilpotency are validated at
// construction; everything downstream may assume both.
class Algebra {
 public:
  Algebra(Field field, int n, std::vector<std::vector<FqVec>> table, std::string name);

  const Field& field() const { return field_; }
  int dim() const { return n_; }
  const std::string& name() const { return name_; }
  std::uint64_t q() const { return field_.q(); }
  // |G| = |J| = |J*| = q^n; throws std::overflow_error past 2^62
  std::uint64_t space_size() const;

  FqVec zero() const { return FqVec(n_, 0); }
  FqVec basis_vec(int i) const;

  FqVec mul(const FqVec& a, const FqVec& b) const;
  FqVec bracket(const FqVec& a, const FqVec& b) const;  // ab - ba
  FqVec add(const FqVec& a, const FqVec& b) const { return vec_add(field_, a, b); }
  FqVec sub(const FqVec& a, const FqVec& b) const { return vec_sub(field_, a, b); }
  FqVec scale(Field::elt s, const FqVec& a) const { return vec_scale(field_, s, a); }
  bool is_zero(const FqVec& a) const { return vec_is_zero(a); }

  // J, J^2, ..., J^m (the nonzero powers, strictly decreasing)
  const std::vector<Subspace>& radical_powers() const { return powers_; }
  int nilpotency_index() const { return static_cast<int>(powers_.size()); }

  // span of pairwise products of basis vectors
  Subspace product_span(const Subspace& u, const Subspace& v) const;
  bool is_mult_closed(const Subspace& u) const;
  bool is_ideal(const Subspace& u) const;  // two-sided ideal of A = F_q 1 + J

  // Deterministic maximal chain: refine the radical-power chain one dimension
  // at a time, always extending by the first echelon basis row of the next
  // power that is independent of the current step.
  IdealChain maximal_ideal_chain() const;

  // All codimension-1 multiplicatively closed subspaces; these are exactly
  // the hyperplanes containing J^2, and there are (q^d - 1)/(q - 1) of them
  // where d = dim(J / J^2).
  std::vector<Subspace> maximal_mult_closed_subspaces() const;

  // The algebra structure induced on a multiplicatively closed subspace,
  // written in the coordinates of its echelon basis.
  Algebra subalgebra(const Subspace& u, std::string name) const;

  // Built-in families.
  static Algebra upper_triangular(const Field& F, int matrix_size);           // u_n(q)
  static Algebra truncated_polynomial(const Field& F, int power);             // radical of F_q[t]/(t^power)
  static Algebra pattern(const Field& F, int matrix_size,
                         std::vector<std::pair<int, int>> positions,
                         std::string name = "");

 private:
  Field field_;
  int n_;
  std::vector<std::vector<FqVec>> table_;
  std::string name_;
  std::vector<Subspace> powers_;

  void validate();
};

}  // namespace algroup
