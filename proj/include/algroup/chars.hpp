#pragma once

#include "algroup/context.hpp"

namespace algroup {

// Restriction of f to the subspace U, in the dual coordinates of U's echelon
// basis rows.
FqVec project_functional(const Field& F, const Subspace& u, const Functional& f);

// The fiber f + U_perp over the restriction of f; for a maximal
// multiplicatively closed U this has exactly q members.
std::vector<Functional> fiber(const Algebra& A, const Subspace& u, const Functional& f);

enum class OrbitType { I, II };

// How a coadjoint orbit of G sits over the maximal algebra subgroup H = 1+U:
// its projected image, its type, and the H-orbits inside the image.
struct OrbitProjectionReport {
  std::size_t orbit = 0;
  Subspace u;
  std::uint64_t pi_image_size = 0;
  OrbitType type = OrbitType::I;
  std::vector<std::size_t> suborbits;  // H-orbit indices; type II lists the
                                       // q orbits in coset order
  int dim_rad_f = 0;
  int dim_rad_f0 = 0;
};

// Requires U maximal multiplicatively closed (codimension 1, contains J^2).
// Verifies the fiber dichotomy member by member, the size/radical/centralizer
// characterizations, and the decomposition of the projected image; any
// disagreement among the equivalent conditions throws std::logic_error.
OrbitProjectionReport classify_orbit(Context& ctx, std::size_t orbit, const Subspace& u);

struct RestrictionReport {
  OrbitProjectionReport classification;
  ClassFunction restricted;               // phi_O on H classes
  std::vector<std::size_t> constituents;  // H-orbit indices summing to it
};

// Restriction of phi_O to H, matched exactly against the predicted H-orbit
// class functions (single orbit for type I, q coset twists for type II).
RestrictionReport restrict_phi(Context& ctx, std::size_t orbit, const Subspace& u);

struct InductionReport {
  OrbitType type = OrbitType::I;
  ClassFunction induced;                 // (phi_{O_0})^G
  std::vector<std::size_t> constituents; // G-orbit indices summing to it
};

// Induction of the H-orbit class function phi_{O_0} to G, matched exactly
// against the predicted sum of G-orbit class functions.
InductionReport induce_phi(Context& ctx, const Subspace& u, std::size_t h_orbit);

// Set-level verification of the preimage of an H-orbit under projection:
// type I gives a disjoint union of q distinct G-orbits, type II a proper
// subset of the single G-orbit above it.
bool inverse_image_check(Context& ctx, const Subspace& u, std::size_t h_orbit);

// Complement data for a maximal U: the standard basis vector e spanning a
// complement of U and the functional e* vanishing on U with e*(e) = 1.
struct ComplementData {
  FqVec e;
  Functional e_star;
};
ComplementData complement_data(const Algebra& A, const Subspace& u);

}  // namespace algroup
