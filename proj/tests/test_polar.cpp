#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "algroup/polar.hpp"

using namespace algroup;

namespace {

Subspace span_of(const Field& F, std::vector<FqVec> rows, int ambient) {
  Mat m(0, ambient);
  for (auto& r : rows) m.append_row(r);
  return Subspace::span_rows(F, m);
}

const FqVec kA{1, 0, 0};
const FqVec kC{0, 0, 1};

std::vector<long long> degree_multiset(Context& ctx) {
  std::vector<long long> degrees;
  for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi)
    degrees.push_back(ctx.phi(oi).degree().rational_value().numerator().as_int64());
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

TEST_CASE("polarization of the zero functional is all of J") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 1), 3));
  Polarization pol = polarize(ctx, Functional{ctx.algebra().zero()});
  CHECK(pol.u.dim() == 3);
  CHECK(pol.subgroup_order == 8);
}

TEST_CASE("commutative algebra: every functional polarizes to J") {
  Context ctx(Algebra::truncated_polynomial(Field::make(2, 1), 3));
  for (std::uint64_t fi = 0; fi < 4; ++fi) {
    Polarization pol = polarize(ctx, Functional{unpack_coords(fi, 2, 2)});
    CHECK(pol.u.dim() == 2);
  }
}

TEST_CASE("worked u_3(2) polarization of c*") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 1), 3));
  const Field& F = ctx.field();
  Polarization pol = polarize(ctx, Functional{kC});
  REQUIRE(pol.pieces.size() == 3);
  CHECK(pol.pieces[0] == span_of(F, {kC}, 3));
  CHECK(pol.pieces[1] == span_of(F, {kA, kC}, 3));
  CHECK(pol.pieces[2] == span_of(F, {kC}, 3));
  CHECK(pol.u == span_of(F, {kA, kC}, 3));
  CHECK(pol.subgroup_order == 4);
}

TEST_CASE("dimension identity holds for every functional in several algebras") {
  for (auto algebra : {Algebra::upper_triangular(Field::make(2, 1), 3),
                       Algebra::upper_triangular(Field::make(3, 1), 3),
                       Algebra::truncated_polynomial(Field::make(2, 1), 4),
                       Algebra::upper_triangular(Field::make(2, 1), 4)}) {
    Context ctx(std::move(algebra));
    const int n = ctx.algebra().dim();
    for (std::uint64_t fi = 0; fi < ctx.group_order(); ++fi) {
      Functional f{unpack_coords(fi, ctx.field().q(), n)};
      Polarization pol = polarize(ctx, f);  // all invariants asserted inside
      CHECK(2 * pol.u.dim() == n + form_radical(ctx.algebra(), f).dim());
    }
  }
}

TEST_CASE("lambda values on the worked example") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 1), 3));
  Subspace u = span_of(ctx.field(), {kA, kC}, 3);
  LinearCharacterData lambda = lambda_class_function(ctx, Functional{kC}, u);
  // H classes are the four singletons, packed over the row basis (a, c):
  // index 1 is 1+c, index 2 is 1+a
  CHECK(lambda.on_h.v[0] == Cyclotomic::integer(2, 1));
  CHECK(lambda.on_h.v[1] == Cyclotomic::integer(2, -1));
  CHECK(lambda.on_h.v[2] == Cyclotomic::integer(2, 1));
  CHECK(lambda.on_h.v[3] == Cyclotomic::integer(2, -1));
  CHECK_NOTHROW(verify_lambda_multiplicative(ctx, Functional{kC}, u));
  // with all checks
  LinearCharacterData strict = linear_character(ctx, Functional{kC}, u);
  CHECK(strict.on_h == lambda.on_h);
}

TEST_CASE("multiplicativity fails on the truncated polynomial algebras") {
  // (1+t)(1+t) = 1 + 2t + t^2 while lambda(1+t)^2 misses psi(f(t^2)):
  // the orbit functions of 1+J here are not all group characters
  SUBCASE("F_3[t]/(t^3), f = dual of t^2") {
    Context ctx(Algebra::truncated_polynomial(Field::make(3, 1), 3));
    Functional f{FqVec{0, 1}};
    Polarization pol = polarize(ctx, f);
    CHECK(pol.u.dim() == 2);  // U = J
    CHECK_THROWS_AS(verify_lambda_multiplicative(ctx, f, pol.u), std::logic_error);
  }
  SUBCASE("F_2[t]/(t^4), f = dual of t^2") {
    Context ctx(Algebra::truncated_polynomial(Field::make(2, 1), 4));
    Functional f{FqVec{0, 1, 0}};
    Polarization pol = polarize(ctx, f);
    CHECK_THROWS_AS(verify_lambda_multiplicative(ctx, f, pol.u), std::logic_error);
  }
}

TEST_CASE("induction of lambda matches phi on u_3(2)") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 1), 3));
  SUBCASE("trivial functional: trivial character") {
    Polarization pol = polarize(ctx, Functional{ctx.algebra().zero()});
    LinearCharacterData lambda = lambda_class_function(ctx, Functional{ctx.algebra().zero()}, pol.u);
    ClassFunction induced = induce_class_function(ctx, pol.u, lambda.on_h);
    CHECK(induced == ctx.phi(0));
  }
  SUBCASE("c*: induced degree 2 equals the big-orbit function pointwise") {
    Polarization pol = polarize(ctx, Functional{kC});
    LinearCharacterData lambda = lambda_class_function(ctx, Functional{kC}, pol.u);
    ClassFunction induced = induce_class_function(ctx, pol.u, lambda.on_h);
    CHECK(induced.degree() == Cyclotomic::integer(2, 2));
    CHECK(induced == ctx.phi(4));
  }
}

TEST_CASE("pairing identity") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 1), 3));
  SUBCASE("worked case: two coset points over sqrt(4) gives 1") {
    Cyclotomic value = pairing_check(ctx, 4, Functional{kC}, span_of(ctx.field(), {kA, kC}, 3));
    CHECK(value == Cyclotomic::integer(2, 1));
  }
  SUBCASE("f = 0 with U = J") {
    Cyclotomic value = pairing_check(ctx, 0, Functional{ctx.algebra().zero()}, Subspace::full(3));
    CHECK(value == Cyclotomic::integer(2, 1));
  }
}

TEST_CASE("certification of u_2(q): everything linear, witnessed by H = G") {
  for (int q : {2, 3}) {
    Context ctx(Algebra::upper_triangular(Field::make(q, 1), 2));
    CertifiedTable table = certify_irreducible_table(ctx);
    CHECK(table.all_passed);
    CHECK(table.witnesses.size() == static_cast<std::size_t>(q));
    for (const auto& w : table.witnesses) CHECK(w.u.dim() == 1);
    CHECK(degree_multiset(ctx) == std::vector<long long>(q, 1));
  }
}

TEST_CASE("certification of u_3(2): degrees (1,1,1,1,2), all stages pass") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 1), 3));
  CertifiedTable table = certify_irreducible_table(ctx);
  for (const auto& stage : table.stages) {
    INFO(stage.name, ": ", stage.detail);
    CHECK(stage.passed);
  }
  CHECK(table.all_passed);
  CHECK(degree_multiset(ctx) == std::vector<long long>{1, 1, 1, 1, 2});
}

TEST_CASE("certification of u_4(2) passes with squared degrees summing to 64") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 1), 4));
  CertifiedTable table = certify_irreducible_table(ctx);
  for (const auto& stage : table.stages) {
    INFO(stage.name, ": ", stage.detail);
    CHECK(stage.passed);
  }
  long long sum = 0;
  for (auto d : degree_multiset(ctx)) sum += d * d;
  CHECK(sum == 64);
}

TEST_CASE("certification of u_3(4) over the extension field F_4") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 2), 3));
  CHECK(ctx.class_count() == 19);  // q^2 + q - 1
  CertifiedTable table = certify_irreducible_table(ctx);
  for (const auto& stage : table.stages) {
    INFO(stage.name, ": ", stage.detail);
    CHECK(stage.passed);
  }
  auto degrees = degree_multiset(ctx);
  CHECK(std::count(degrees.begin(), degrees.end(), 1) == 16);
  CHECK(std::count(degrees.begin(), degrees.end(), 4) == 3);
}

TEST_CASE("certification at p = 5: values in Q(zeta_5)") {
  Context ctx(Algebra::truncated_polynomial(Field::make(5, 1), 2));
  CertifiedTable table = certify_irreducible_table(ctx);
  CHECK(table.all_passed);
  CHECK(ctx.orbit_count() == 5);
  // a nontrivial linear character takes a primitive fifth root of unity
  CHECK(ctx.phi(1).v[1] == Cyclotomic::root_of_unity(5, ctx.field().trace(1)));
}

TEST_CASE("spanning-set multiplicativity check on a group too large for the pair loop") {
  // |H| = 2^11, so |H|^2 exceeds the exhaustive cutoff; the check runs on
  // the F_p-spanning pairs instead and must reach the same verdicts
  Context ctx(Algebra::truncated_polynomial(Field::make(2, 1), 12));
  Functional t_star{FqVec{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}};
  Polarization pol = polarize(ctx, t_star);
  CHECK(pol.u.dim() == 11);
  CHECK_NOTHROW(verify_lambda_multiplicative(ctx, t_star, pol.u));
  Functional t2_star{FqVec{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}};
  CHECK_THROWS_AS(verify_lambda_multiplicative(ctx, t2_star, polarize(ctx, t2_star).u),
                  std::logic_error);
}

TEST_CASE("certification of trunc(3,3) fails exactly at the linear character") {
  Context ctx(Algebra::truncated_polynomial(Field::make(3, 1), 3));
  CertifiedTable table = certify_irreducible_table(ctx);
  CHECK(!table.all_passed);
  std::map<std::string, bool> by_name;
  for (const auto& stage : table.stages) by_name[stage.name] = stage.passed;
  CHECK(!by_name["linear-character"]);
  // every class-function identity still holds exactly
  CHECK(by_name["orbit-count"]);
  CHECK(by_name["orbit-size-law"]);
  CHECK(by_name["orthonormality"]);
  CHECK(by_name["second-orthogonality"]);
  CHECK(by_name["regular-decomposition"]);
  CHECK(by_name["polarization"]);
  CHECK(by_name["induced-equality"]);
  CHECK(by_name["pairing"]);
  CHECK(by_name["degrees"]);
  CHECK(by_name["conjugation-closure"]);
}

TEST_CASE("branching dichotomy on u_3(2): four twists stay, one splits, per subgroup") {
  Context ctx(Algebra::upper_triangular(Field::make(2, 1), 3));
  BranchReport report = clifford_branching_check(ctx);
  REQUIRE(report.subgroups.size() == 3);
  CHECK(report.entries.size() == 15);
  for (std::size_t si = 0; si < 3; ++si) {
    int stay = 0, split = 0;
    for (const auto& entry : report.entries) {
      if (entry.subgroup != si) continue;
      (entry.branch == 1 ? stay : split) += 1;
    }
    CHECK(stay == 4);
    CHECK(split == 1);
  }
  // 1+span(a+b, c) is cyclic of order 4; its own orbit functions are not all
  // characters, so its recursive certification is recorded as incomplete
  int certified = 0;
  for (bool flag : report.subgroup_certified) certified += flag ? 1 : 0;
  CHECK(certified == 2);
}

TEST_CASE("branching on an abelian group: everything restricts irreducibly") {
  Context ctx(Algebra::truncated_polynomial(Field::make(2, 1), 2));
  BranchReport report = clifford_branching_check(ctx);
  for (const auto& entry : report.entries) CHECK(entry.branch == 1);
}

TEST_CASE("every closed 4x4 pattern algebra certifies all class-function stages") {
  // enumerate all composition-closed subsets of the strictly upper positions
  // of a 4x4 matrix and run the full chain on each; every stage except the
  // linear-character one states an identity that must hold unconditionally
  const std::vector<std::pair<int, int>> all = {{1, 2}, {2, 3}, {3, 4},
                                                {1, 3}, {2, 4}, {1, 4}};
  int closed_count = 0;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> subset;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask & (1u << k)) subset.push_back(all[k]);
    auto in_subset = [&](int i, int j) {
      return std::find(subset.begin(), subset.end(), std::make_pair(i, j)) != subset.end();
    };
    bool closed = true;
    for (auto [i, j] : subset)
      for (auto [k, l] : subset)
        if (j == k && !in_subset(i, l)) closed = false;
    if (!closed) continue;
    ++closed_count;
    Context ctx(Algebra::pattern(Field::make(2, 1), 4, subset));
    CertifiedTable table = certify_irreducible_table(ctx);
    for (const auto& stage : table.stages) {
      if (stage.name == "linear-character") continue;
      INFO(ctx.algebra().name(), " / ", stage.name, ": ", stage.detail);
      CHECK(stage.passed);
    }
  }
  CHECK(closed_count > 20);  // the enumeration is not vacuous
}

TEST_CASE("conjugation closure permutes rows by negating functionals") {
  Context ctx(Algebra::upper_triangular(Field::make(3, 1), 3));
  for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
    Functional neg{vec_scale(ctx.field(), 2, ctx.orbits().orbits[oi].rep.c)};
    std::size_t image = ctx.orbit_index_of(neg);
    ClassFunction conj;
    for (const auto& value : ctx.phi(oi).v) conj.v.push_back(value.conjugate());
    CHECK(conj == ctx.phi(image));
  }
}
