#include "algroup/group.hpp"

#include <stdexcept>
#include <string>

namespace algroup {

GroupElement gidentity(const Algebra& A) { return GroupElement{A.zero()}; }

GroupElement gmul(const Algebra& A, const GroupElement& x, const GroupElement& y) {
  return GroupElement{A.add(A.add(x.a, y.a), A.mul(x.a, y.a))};
}

GroupElement ginv(const Algebra& A, const GroupElement& x) {
  FqVec acc = A.zero();
  FqVec pow = x.a;
  bool negate = true;
  while (!A.is_zero(pow)) {
    acc = negate ? A.sub(acc, pow) : A.add(acc, pow);
    pow = A.mul(pow, x.a);
    negate = !negate;
  }
  return GroupElement{acc};
}

GroupElement gconj(const Algebra& A, const GroupElement& x, const GroupElement& y) {
  return gmul(A, gmul(A, ginv(A, y), x), y);
}

std::uint64_t pack_element(const Algebra& A, const GroupElement& x) {
  return pack_coords(x.a, A.field().q());
}

GroupElement unpack_element(const Algebra& A, std::uint64_t idx) {
  return GroupElement{unpack_coords(idx, A.field().q(), A.dim())};
}

std::uint64_t element_count_checked(const Algebra& A, std::uint64_t budget) {
  std::uint64_t size = A.space_size();
  if (size > budget)
    throw std::runtime_error("group: enumeration needs " + std::to_string(size) +
                             " elements, over the budget of " + std::to_string(budget));
  return size;
}

ConjugacyClasses conjugacy_classes(const Algebra& A, std::uint64_t budget) {
  const std::uint64_t size = element_count_checked(A, budget);
  ConjugacyClasses cc;
  cc.class_of.assign(size, UINT32_MAX);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (cc.class_of[idx] != UINT32_MAX) continue;
    const auto cls = static_cast<std::uint32_t>(cc.reps.size());
    GroupElement x = unpack_element(A, idx);
    cc.reps.push_back(x.a);
    std::uint64_t members = 0;
    for (std::uint64_t yi = 0; yi < size; ++yi) {
      GroupElement y = unpack_element(A, yi);
      std::uint64_t ci = pack_element(A, gconj(A, x, y));
      if (cc.class_of[ci] == UINT32_MAX) {
        cc.class_of[ci] = cls;
        ++members;
      }
    }
    cc.sizes.push_back(members);
  }
  return cc;
}

std::uint64_t adjoint_orbit_count(const Algebra& A, std::uint64_t budget) {
  const std::uint64_t size = element_count_checked(A, budget);
  std::vector<bool> seen(size, false);
  std::uint64_t orbits = 0;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (seen[idx]) continue;
    ++orbits;
    FqVec a = unpack_coords(idx, A.field().q(), A.dim());
    for (std::uint64_t xi = 0; xi < size; ++xi) {
      // x a x^(-1) = a + u a + a v + u a v for x = 1+u, x^(-1) = 1+v
      GroupElement x{unpack_coords(xi, A.field().q(), A.dim())};
      const FqVec& u = x.a;
      FqVec v = ginv(A, x).a;
      FqVec image = A.add(a, A.mul(u, a));
      image = A.add(image, A.mul(image, v));
      seen[pack_coords(image, A.field().q())] = true;
    }
  }
  return orbits;
}

}  // namespace algroup
