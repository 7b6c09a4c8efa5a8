#include "algroup/coadjoint.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace algroup {

Field::elt eval_functional(const Field& F, const Functional& f, const FqVec& a) {
  return dot(F, f.c, a);
}

Mat coadjoint_matrix(const Algebra& A, const GroupElement& x) {
  // column j of the conjugation map a -> x^(-1) a x is the image of e_j;
  // pulling back along it sends f to transpose(C) f
  const int n = A.dim();
  GroupElement xinv = ginv(A, x);
  Mat c(n, n);
  for (int j = 0; j < n; ++j) {
    // x^(-1) e_j x = (1+v) e_j (1+u) with v = xinv.a, u = x.a
    FqVec image = A.add(A.basis_vec(j), A.mul(xinv.a, A.basis_vec(j)));
    image = A.add(image, A.mul(image, x.a));
    for (int i = 0; i < n; ++i) c.at(i, j) = image[i];
  }
  return transpose(c);
}

Functional coact(const Algebra& A, const GroupElement& x, const Functional& f) {
  return Functional{mat_vec(A.field(), coadjoint_matrix(A, x), f.c)};
}

FormMatrix form_matrix(const Algebra& A, const Functional& f) {
  const int n = A.dim();
  FormMatrix fm;
  fm.m = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      fm.m.at(i, j) = eval_functional(A.field(), f, A.bracket(A.basis_vec(i), A.basis_vec(j)));
  fm.rank = rank(A.field(), fm.m);
  if (fm.rank % 2 != 0)
    throw std::logic_error("coadjoint: alternating form with odd rank");
  return fm;
}

Subspace form_radical(const Algebra& A, const Functional& f) {
  return Subspace::span_rows(A.field(), nullspace(A.field(), form_matrix(A, f).m));
}

std::uint64_t centralizer_order(const Algebra& A, const Functional& f) {
  int dim_rad = A.dim() - form_matrix(A, f).rank;
  std::uint64_t order = 1;
  for (int i = 0; i < dim_rad; ++i) order *= A.field().q();
  return order;
}

namespace {

std::vector<Mat> generator_matrices(const Algebra& A) {
  std::vector<Mat> gens;
  for (int i = 0; i < A.dim(); ++i) {
    for (int alpha = 1; alpha < A.field().q(); ++alpha) {
      GroupElement g{A.scale(static_cast<Field::elt>(alpha), A.basis_vec(i))};
      gens.push_back(coadjoint_matrix(A, g));
    }
  }
  return gens;
}

// closure of {seed} under the given dual-action matrices
std::vector<std::uint32_t> bfs_closure(const Algebra& A, std::uint64_t seed,
                                       const std::vector<Mat>& actions) {
  const int q = A.field().q();
  const int n = A.dim();
  std::vector<std::uint32_t> members{static_cast<std::uint32_t>(seed)};
  std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(seed)};
  std::vector<bool> seen;  // lazily sized only for what BFS touches
  auto mark = [&](std::uint64_t idx) {
    if (seen.size() <= idx) seen.resize(idx + 1, false);
    if (seen[idx]) return false;
    seen[idx] = true;
    return true;
  };
  mark(seed);
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto fi : frontier) {
      FqVec coords = unpack_coords(fi, q, n);
      for (const Mat& m : actions) {
        std::uint64_t gi = pack_coords(mat_vec(A.field(), m, coords), q);
        if (mark(gi)) {
          members.push_back(static_cast<std::uint32_t>(gi));
          next.push_back(static_cast<std::uint32_t>(gi));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

CoadjointOrbit orbit_of(const Algebra& A, const Functional& f) {
  const int q = A.field().q();
  CoadjointOrbit orbit;
  orbit.rank = form_matrix(A, f).rank;
  std::uint64_t expected = 1;
  for (int i = 0; i < orbit.rank; ++i) expected *= q;

  std::uint64_t seed = pack_coords(f.c, q);
  orbit.members = bfs_closure(A, seed, generator_matrices(A));
  if (orbit.members.size() != expected) {
    // generator set was not enough for this orbit: redo under the full group
    orbit.used_fallback = true;
    std::vector<Mat> all;
    const std::uint64_t size = A.space_size();
    all.reserve(size);
    for (std::uint64_t xi = 0; xi < size; ++xi)
      all.push_back(coadjoint_matrix(A, unpack_element(A, xi)));
    orbit.members = bfs_closure(A, seed, all);
    if (orbit.members.size() != expected)
      throw std::logic_error("coadjoint: orbit size " + std::to_string(orbit.members.size()) +
                             " differs from q^rank = " + std::to_string(expected));
  }
  orbit.rep = Functional{unpack_coords(orbit.members.front(), q, A.dim())};
  return orbit;
}

OrbitSet all_orbits(const Algebra& A, std::uint64_t budget) {
  const std::uint64_t size = element_count_checked(A, budget);
  OrbitSet set;
  std::vector<bool> seen(size, false);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (seen[idx]) continue;
    CoadjointOrbit orbit = orbit_of(A, Functional{unpack_coords(idx, A.field().q(), A.dim())});
    set.any_fallback = set.any_fallback || orbit.used_fallback;
    for (auto m : orbit.members) seen[m] = true;
    set.orbits.push_back(std::move(orbit));
  }
  std::stable_sort(set.orbits.begin(), set.orbits.end(),
                   [](const CoadjointOrbit& a, const CoadjointOrbit& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a.members.front() < b.members.front();
                   });
  set.orbit_of.assign(size, UINT32_MAX);
  for (std::size_t oi = 0; oi < set.orbits.size(); ++oi)
    for (auto m : set.orbits[oi].members)
      set.orbit_of[m] = static_cast<std::uint32_t>(oi);
  return set;
}

std::pair<std::uint64_t, std::uint64_t> adjoint_vs_coadjoint_count(const Algebra& A,
                                                                   std::uint64_t budget) {
  return {adjoint_orbit_count(A, budget), all_orbits(A, budget).orbits.size()};
}

}  // namespace algroup
