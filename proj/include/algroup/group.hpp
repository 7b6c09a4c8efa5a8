#pragma once

#include <cstdint>
#include <vector>

#include "algroup/algebra.hpp"

namespace algroup {

// Element 1 + a of the algebra group G = 1 + J, stored by its a-part.
struct GroupElement {
  FqVec a;
  bool operator==(const GroupElement&) const = default;
};

GroupElement gidentity(const Algebra& A);
// (1+a)(1+b) = 1 + a + b + ab
GroupElement gmul(const Algebra& A, const GroupElement& x, const GroupElement& y);
// Neumann series: (1+a)^(-1) = 1 - a + a^2 - ... (finite, a nilpotent)
GroupElement ginv(const Algebra& A, const GroupElement& x);
// y^(-1) x y
GroupElement gconj(const Algebra& A, const GroupElement& x, const GroupElement& y);

std::uint64_t pack_element(const Algebra& A, const GroupElement& x);
GroupElement unpack_element(const Algebra& A, std::uint64_t idx);

// Throws std::runtime_error naming the required size when q^n exceeds budget.
std::uint64_t element_count_checked(const Algebra& A, std::uint64_t budget);

struct ConjugacyClasses {
  std::vector<FqVec> reps;              // a-parts, each the lex-least member
  std::vector<std::uint32_t> class_of;  // indexed by packed element
  std::vector<std::uint64_t> sizes;
  std::size_t count() const { return reps.size(); }
};

// Orbit partition of G under conjugation, by exhaustive enumeration.
// Classes are indexed in order of their lex-least representative, so the
// identity is always class 0.
ConjugacyClasses conjugacy_classes(const Algebra& A, std::uint64_t budget);

// Number of orbits of G acting on J by a -> x a x^(-1).
std::uint64_t adjoint_orbit_count(const Algebra& A, std::uint64_t budget);

}  // namespace algroup
