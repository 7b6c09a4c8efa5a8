#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "algroup/group.hpp"

using namespace algroup;

namespace {
constexpr std::uint64_t kBudget = std::uint64_t(1) << 20;
}

TEST_CASE("inverse via the truncating series") {
  SUBCASE("square-zero: (1+a)^(-1) = 1-a") {
    Algebra A = Algebra::upper_triangular(Field::make(3, 1), 2);
    GroupElement x{FqVec{2}};
    CHECK(ginv(A, x).a == FqVec{1});  // -2 = 1 mod 3
  }
  SUBCASE("F_2[t]/(t^3): (1+t)^(-1) = 1+t+t^2") {
    Algebra A = Algebra::truncated_polynomial(Field::make(2, 1), 3);
    GroupElement x{FqVec{1, 0}};
    CHECK(ginv(A, x).a == FqVec{1, 1});
  }
}

TEST_CASE("group axioms, exhaustively on u_3(2)") {
  Algebra A = Algebra::upper_triangular(Field::make(2, 1), 3);
  const std::uint64_t size = element_count_checked(A, kBudget);
  REQUIRE(size == 8);
  GroupElement id = gidentity(A);
  for (std::uint64_t xi = 0; xi < size; ++xi) {
    GroupElement x = unpack_element(A, xi);
    CHECK(gmul(A, x, ginv(A, x)) == id);
    CHECK(gmul(A, ginv(A, x), x) == id);
    CHECK(gmul(A, x, id) == x);
    for (std::uint64_t yi = 0; yi < size; ++yi) {
      GroupElement y = unpack_element(A, yi);
      for (std::uint64_t zi = 0; zi < size; ++zi) {
        GroupElement z = unpack_element(A, zi);
        CHECK(gmul(A, gmul(A, x, y), z) == gmul(A, x, gmul(A, y, z)));
      }
    }
  }
}

TEST_CASE("conjugation is a right action") {
  Algebra A = Algebra::upper_triangular(Field::make(2, 1), 4);
  for (std::uint64_t xi = 0; xi < 64; xi += 7) {
    for (std::uint64_t yi = 0; yi < 64; yi += 5) {
      for (std::uint64_t zi = 0; zi < 64; zi += 11) {
        GroupElement x = unpack_element(A, xi), y = unpack_element(A, yi),
                     z = unpack_element(A, zi);
        CHECK(gconj(A, gconj(A, x, y), z) == gconj(A, x, gmul(A, y, z)));
      }
    }
  }
}

TEST_CASE("element counts") {
  CHECK(element_count_checked(Algebra::upper_triangular(Field::make(2, 1), 3), kBudget) == 8);
  CHECK(element_count_checked(Algebra::upper_triangular(Field::make(2, 1), 4), kBudget) == 64);
  CHECK(element_count_checked(Algebra::truncated_polynomial(Field::make(3, 1), 3), kBudget) == 9);
}

TEST_CASE("budget overflow is reported with the required size") {
  Algebra A = Algebra::upper_triangular(Field::make(2, 1), 4);
  CHECK_THROWS_WITH_AS(element_count_checked(A, 32), doctest::Contains("64"),
                       std::runtime_error);
}

TEST_CASE("conjugacy classes of u_3(2): sizes (1,1,2,2,2)") {
  Algebra A = Algebra::upper_triangular(Field::make(2, 1), 3);
  ConjugacyClasses cc = conjugacy_classes(A, kBudget);
  REQUIRE(cc.count() == 5);
  std::vector<std::uint64_t> sizes = cc.sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
  // identity comes first and its class is a singleton
  CHECK(cc.reps[0] == A.zero());
  CHECK(cc.sizes[0] == 1);
}

TEST_CASE("class count of u_3(3) is q^2 + q - 1 = 11") {
  Algebra A = Algebra::upper_triangular(Field::make(3, 1), 3);
  CHECK(conjugacy_classes(A, kBudget).count() == 11);
}

TEST_CASE("abelian group: every class a singleton") {
  Algebra A = Algebra::truncated_polynomial(Field::make(2, 1), 3);
  ConjugacyClasses cc = conjugacy_classes(A, kBudget);
  CHECK(cc.count() == 4);
  for (auto s : cc.sizes) CHECK(s == 1);
}

TEST_CASE("class equation and p-power sizes") {
  for (auto A : {Algebra::upper_triangular(Field::make(2, 1), 4),
                 Algebra::upper_triangular(Field::make(3, 1), 3)}) {
    ConjugacyClasses cc = conjugacy_classes(A, kBudget);
    std::uint64_t total = 0;
    const int p = A.field().p();
    for (auto s : cc.sizes) {
      total += s;
      std::uint64_t r = s;
      while (r % p == 0) r /= p;
      CHECK(r == 1);
    }
    CHECK(total == A.space_size());
    // class_of is total and consistent with representatives
    for (std::size_t c = 0; c < cc.count(); ++c)
      CHECK(cc.class_of[pack_coords(cc.reps[c], A.field().q())] == c);
  }
}

TEST_CASE("representatives are lexicographically least") {
  Algebra A = Algebra::upper_triangular(Field::make(2, 1), 3);
  ConjugacyClasses cc = conjugacy_classes(A, kBudget);
  for (std::uint64_t idx = 0; idx < 8; ++idx) {
    std::uint32_t c = cc.class_of[idx];
    CHECK(pack_coords(cc.reps[c], 2) <= idx);
  }
}

TEST_CASE("adjoint orbit count equals the class number") {
  Algebra A = Algebra::upper_triangular(Field::make(2, 1), 3);
  CHECK(adjoint_orbit_count(A, kBudget) == 5);
  Algebra B = Algebra::truncated_polynomial(Field::make(3, 1), 3);
  CHECK(adjoint_orbit_count(B, kBudget) == 9);
}
