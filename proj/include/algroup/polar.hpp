#pragma once

#include <string>

#include "algroup/chars.hpp"

namespace algroup {

// Polarization of a functional f: the multiplicatively closed maximal
// isotropic subspace built from a maximal ideal chain by summing the
// stepwise radicals of the restricted form.
struct Polarization {
  Functional f;
  std::vector<Subspace> pieces;  // R_i per chain step, i = 1..n
  Subspace u;
  std::uint64_t subgroup_order = 0;  // |H| = q^(dim U)
};

// Builds and fully checks the polarization: multiplicative closure, isotropy,
// Rad(f) inside U, the dimension identity
// dim U = (dim J + dim Rad f)/2, and the piecewise product containment
// R_i R_j inside R_min(i,j). Any failure throws std::logic_error.
Polarization polarize(const Algebra& A, const Functional& f, const IdealChain& chain);
Polarization polarize(Context& ctx, const Functional& f);  // uses the default chain

struct LinearCharacterData {
  ClassFunction on_h;    // the character on the classes of H = 1+U
  std::size_t h_orbit;   // the singleton H-orbit carrying it
};

// The values lambda_f(1+a) = psi(f(a)) on the classes of H = 1+U, plus the
// index of the singleton H-orbit of f|U (requires that orbit to be a
// singleton, which holds whenever U is f-isotropic). No multiplicativity
// check.
LinearCharacterData lambda_class_function(Context& ctx, const Functional& f, const Subspace& u);

// Checks lambda_f(xy) = lambda_f(x) lambda_f(y), exhaustively over H x H up
// to a size cutoff and beyond that over an F_p-spanning set of pairs (the
// defect psi(f(ab)) is biadditive, so the two are equivalent). Throws
// std::logic_error with a concrete counterexample pair on failure.
void verify_lambda_multiplicative(Context& ctx, const Functional& f, const Subspace& u);

// lambda_f with all its checks: multiplicative, and equal to the class
// function of the singleton H-orbit of f|U. Failure is fatal.
LinearCharacterData linear_character(Context& ctx, const Functional& f, const Subspace& u);

// Both routes of the pairing identity: the Frobenius product of phi_O with
// the induced linear character, and the coset-intersection count
// |(f + U_perp) cap O| / sqrt(|O|). Returns the common value (1 for a
// polarization); a mismatch throws std::logic_error.
Cyclotomic pairing_check(Context& ctx, std::size_t orbit, const Functional& f, const Subspace& u);

struct OrbitWitness {
  std::size_t orbit = 0;
  Functional f;
  Subspace u;
  std::uint64_t subgroup_order = 0;
  std::vector<Cyclotomic> lambda_values;  // per H class
};

struct CertStage {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertifiedTable {
  std::vector<CertStage> stages;
  std::vector<OrbitWitness> witnesses;
  bool all_passed = false;
};

// The full certification chain: counting, orbit sizes, both orthogonality
// relations, the regular decomposition, a polarization witness with a
// multiplicative linear character per orbit, the induced-character equality,
// the pairing identity, degree structure, and closure under conjugation.
CertifiedTable certify_irreducible_table(Context& ctx);

struct BranchEntry {
  std::size_t subgroup = 0;  // index into the checked maximal subspaces
  std::size_t chi = 0;       // orbit index of the irreducible
  int branch = 0;            // 1: restriction stays irreducible, 2: induced from below
};

struct BranchReport {
  std::vector<Subspace> subgroups;
  std::vector<bool> subgroup_certified;  // whether the recursive certification
                                         // of 1+U passed in full
  std::vector<BranchEntry> entries;
};

// Restriction/induction dichotomy for every certified irreducible against
// every maximal algebra subgroup (up to max_subgroups): exactly one branch
// holds, with the exact norms, multiplicities, and twist structure, all
// measured against the orbit basis of the subgroup. The recursive subgroup
// certification is run and recorded; the dichotomy checks are exact either
// way. Any violation throws std::logic_error.
BranchReport clifford_branching_check(Context& ctx, std::size_t max_subgroups = SIZE_MAX);

}  // namespace algroup
