#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "algroup/group.hpp"

namespace algroup {

// Element of J* as coordinates over the dual basis: c[i] = f(e_i).
struct Functional {
  FqVec c;
  bool operator==(const Functional&) const = default;
};

Field::elt eval_functional(const Field& F, const Functional& f, const FqVec& a);

// Matrix of the skew form B_f(a, b) = f(ab - ba): entries f([e_i, e_j]).
// Alternating, so the rank is even.
struct FormMatrix {
  Mat m;
  int rank = 0;
};

// Matrix of f -> x.f on dual coordinates, where (x.f)(a) = f(x^(-1) a x).
Mat coadjoint_matrix(const Algebra& A, const GroupElement& x);
Functional coact(const Algebra& A, const GroupElement& x, const Functional& f);

FormMatrix form_matrix(const Algebra& A, const Functional& f);
// null space of the form: { a : f([ab]) = 0 for all b }
Subspace form_radical(const Algebra& A, const Functional& f);
// |C_G(f)| = q^(dim Rad f)
std::uint64_t centralizer_order(const Algebra& A, const Functional& f);

struct CoadjointOrbit {
  Functional rep;                      // lex-least member
  std::vector<std::uint32_t> members;  // packed, sorted ascending
  int rank = 0;                        // rank of the form at any member
  bool used_fallback = false;          // generator closure was insufficient
  std::uint64_t size() const { return members.size(); }
};

// Orbit through f: breadth-first closure under the generators 1 + alpha e_i,
// certified against |O| = q^rank; on a certificate miss the closure is redone
// under the full group (and flagged), never accepted silently.
CoadjointOrbit orbit_of(const Algebra& A, const Functional& f);

struct OrbitSet {
  std::vector<CoadjointOrbit> orbits;    // sorted by (size, rep)
  std::vector<std::uint32_t> orbit_of;   // indexed by packed functional
  bool any_fallback = false;
};

OrbitSet all_orbits(const Algebra& A, std::uint64_t budget);

// (number of adjoint orbits on J, number of coadjoint orbits on J*); both
// must equal the class number.
std::pair<std::uint64_t, std::uint64_t> adjoint_vs_coadjoint_count(const Algebra& A,
                                                                   std::uint64_t budget);

}  // namespace algroup
