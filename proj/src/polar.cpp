#include "algroup/polar.hpp"

#include <algorithm>
#include <stdexcept>

namespace algroup {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Field::elt eval_bracket(const Algebra& A, const Functional& f, const FqVec& a, const FqVec& b) {
  return eval_functional(A.field(), f, A.bracket(a, b));
}

}  // namespace

Polarization polarize(const Algebra& A, const Functional& f, const IdealChain& chain) {
  const Field& F = A.field();
  const int n = A.dim();
  if (static_cast<int>(chain.steps.size()) != n + 1)
    throw std::invalid_argument("polarize: chain does not run from 0 to J in single steps");

  Polarization pol;
  pol.f = f;
  Subspace u = Subspace::zero(n);
  for (int i = 1; i <= n; ++i) {
    const Subspace& step = chain.steps[i];
    // radical of the form restricted to the step, back in J coordinates
    Mat restricted(step.dim(), step.dim());
    for (int a = 0; a < step.dim(); ++a)
      for (int b = 0; b < step.dim(); ++b)
        restricted.at(a, b) = eval_bracket(A, f, step.basis().row(a), step.basis().row(b));
    Mat kernel = nullspace(F, restricted);
    Mat lifted(0, n);
    for (int r = 0; r < kernel.rows; ++r)
      lifted.append_row(step.from_coords(F, kernel.row(r)));
    if (lifted.cols == 0) lifted.cols = n;
    Subspace piece = Subspace::span_rows(F, lifted);
    u = u.sum(F, piece);
    pol.pieces.push_back(std::move(piece));
  }
  pol.u = std::move(u);
  pol.subgroup_order = pow_u64(F.q(), pol.u.dim());

  if (!A.is_mult_closed(pol.u))
    throw std::logic_error("polarize: subspace is not multiplicatively closed");
  for (int i = 0; i < pol.u.dim(); ++i)
    for (int j = 0; j < pol.u.dim(); ++j)
      if (eval_bracket(A, f, pol.u.basis().row(i), pol.u.basis().row(j)) != 0)
        throw std::logic_error("polarize: subspace is not isotropic");
  Subspace radical = form_radical(A, f);
  if (!pol.u.contains(F, radical))
    throw std::logic_error("polarize: radical not contained in the subspace");
  if (2 * pol.u.dim() != n + radical.dim())
    throw std::logic_error("polarize: dimension identity fails: 2*" +
                           std::to_string(pol.u.dim()) + " != " + std::to_string(n) + " + " +
                           std::to_string(radical.dim()));
  // piecewise closure: R_i R_j lands in R_min(i,j)
  for (std::size_t i = 0; i < pol.pieces.size(); ++i) {
    for (std::size_t j = 0; j < pol.pieces.size(); ++j) {
      const Subspace& low = pol.pieces[std::min(i, j)];
      for (int a = 0; a < pol.pieces[i].dim(); ++a)
        for (int b = 0; b < pol.pieces[j].dim(); ++b)
          if (!low.contains(F, A.mul(pol.pieces[i].basis().row(a), pol.pieces[j].basis().row(b))))
            throw std::logic_error("polarize: piece product escapes the lower piece");
    }
  }
  return pol;
}

Polarization polarize(Context& ctx, const Functional& f) {
  return polarize(ctx.algebra(), f, ctx.chain());
}

LinearCharacterData lambda_class_function(Context& ctx, const Functional& f, const Subspace& u) {
  const Field& F = ctx.field();
  Context& h = ctx.subcontext(u);

  FqVec f0 = project_functional(F, u, f);
  std::size_t h_orbit = h.orbit_index_of(Functional{f0});
  if (h.orbits().orbits[h_orbit].size() != 1)
    throw std::logic_error("restriction of f does not generate a singleton H-orbit");

  LinearCharacterData data;
  data.h_orbit = h_orbit;
  data.on_h.v.reserve(h.class_count());
  for (std::size_t hc = 0; hc < h.class_count(); ++hc) {
    FqVec a = u.from_coords(F, h.classes().reps[hc]);
    data.on_h.v.push_back(
        Cyclotomic::root_of_unity(F.p(), F.psi_exponent(eval_functional(F, f, a))));
  }
  return data;
}

void verify_lambda_multiplicative(Context& ctx, const Functional& f, const Subspace& u) {
  const Algebra& A = ctx.algebra();
  const Field& F = A.field();
  const int p = F.p();
  Context& h = ctx.subcontext(u);
  const Algebra& S = h.algebra();
  const std::uint64_t h_size = h.group_order();

  auto report = [&](const FqVec& a, const FqVec& b) {
    throw std::logic_error("lambda is not multiplicative on 1+U for f = " +
                           std::string("(") + std::to_string(pack_coords(f.c, F.q())) +
                           "): psi(f(ab)) != 1 at a = " + std::to_string(pack_coords(a, F.q())) +
                           ", b = " + std::to_string(pack_coords(b, F.q())) +
                           " (packed J coordinates)");
  };

  if (h_size * h_size <= (std::uint64_t(1) << 22)) {
    // exhaustive over H x H; for fixed x the product (1+a)(1+b) = 1+a+(1+a)b
    // is affine in b, so one matrix per x
    const int d = u.dim();
    std::vector<int> exps(h_size, 0);
    std::vector<FqVec> coords(h_size);
    for (std::uint64_t hi = 0; hi < h_size; ++hi) {
      coords[hi] = unpack_coords(hi, F.q(), d);
      FqVec a = u.from_coords(F, coords[hi]);
      exps[hi] = F.psi_exponent(eval_functional(F, f, a));
    }
    for (std::uint64_t xi = 0; xi < h_size; ++xi) {
      const FqVec& ax = coords[xi];
      Mat left(d, d);
      for (int j = 0; j < d; ++j) {
        FqVec col = S.add(S.basis_vec(j), S.mul(ax, S.basis_vec(j)));
        for (int i = 0; i < d; ++i) left.at(i, j) = col[i];
      }
      for (std::uint64_t yi = 0; yi < h_size; ++yi) {
        FqVec prod = vec_add(F, ax, mat_vec(F, left, coords[yi]));
        std::uint64_t zi = pack_coords(prod, F.q());
        if (exps[zi] != (exps[xi] + exps[yi]) % p)
          report(u.from_coords(F, ax), u.from_coords(F, coords[yi]));
      }
    }
  } else {
    // the defect psi(f(ab)) is biadditive in (a, b), so checking an
    // F_p-spanning set of pairs is equivalent to checking all of H x H
    for (int i = 0; i < u.dim(); ++i) {
      for (int j = 0; j < u.dim(); ++j) {
        for (int s = 1; s < F.q(); ++s) {
          for (int t = 1; t < F.q(); ++t) {
            FqVec a = vec_scale(F, static_cast<Field::elt>(s), u.basis().row(i));
            FqVec b = vec_scale(F, static_cast<Field::elt>(t), u.basis().row(j));
            if (F.psi_exponent(eval_functional(F, f, A.mul(a, b))) != 0) report(a, b);
          }
        }
      }
    }
  }
}

LinearCharacterData linear_character(Context& ctx, const Functional& f, const Subspace& u) {
  verify_lambda_multiplicative(ctx, f, u);
  LinearCharacterData data = lambda_class_function(ctx, f, u);
  Context& h = ctx.subcontext(u);
  if (!(data.on_h == h.phi(data.h_orbit)))
    throw std::logic_error("linear character differs from the singleton-orbit class function");
  return data;
}

Cyclotomic pairing_check(Context& ctx, std::size_t orbit, const Functional& f,
                         const Subspace& u) {
  const Field& F = ctx.field();
  const CoadjointOrbit& o = ctx.orbits().orbits[orbit];

  LinearCharacterData lambda = lambda_class_function(ctx, f, u);
  ClassFunction induced = induce_class_function(ctx, u, lambda.on_h);
  Cyclotomic lhs = frobenius(ctx, ctx.phi(orbit), induced);

  // right side: count the coset f + U_perp inside O
  Subspace perp = u.annihilator(F);
  std::uint64_t count = 0;
  for (std::uint64_t ci = 0; ci < pow_u64(F.q(), perp.dim()); ++ci) {
    FqVec g = vec_add(F, f.c, perp.from_coords(F, unpack_coords(ci, F.q(), perp.dim())));
    if (ctx.orbits().orbit_of[pack_coords(g, F.q())] == orbit) ++count;
  }
  Rational rhs(BigInt(static_cast<long long>(count)),
               BigInt(static_cast<long long>(pow_u64(F.q(), o.rank / 2))));
  if (!(lhs == Cyclotomic::from_rational(F.p(), rhs)))
    throw std::logic_error("pairing identity: Frobenius product and coset count disagree");
  return lhs;
}

CertifiedTable certify_irreducible_table(Context& ctx) {
  CertifiedTable table;
  auto run_stage = [&table](const std::string& name, auto&& body) {
    CertStage stage;
    stage.name = name;
    try {
      stage.detail = body();
      stage.passed = true;
    } catch (const std::exception& ex) {
      stage.passed = false;
      stage.detail = ex.what();
    }
    table.stages.push_back(std::move(stage));
  };
  const Field& F = ctx.field();
  const int p = F.p();
  const int q = F.q();

  run_stage("orbit-count", [&] {
    std::size_t k = ctx.class_count();
    std::size_t omega = ctx.orbit_count();
    std::uint64_t adj = ctx.adjoint_count();
    if (omega != k || adj != k)
      throw std::logic_error("counts disagree: classes " + std::to_string(k) + ", orbits " +
                             std::to_string(omega) + ", adjoint " + std::to_string(adj));
    return "classes = coadjoint orbits = adjoint orbits = " + std::to_string(k);
  });

  run_stage("orbit-size-law", [&] {
    for (const auto& o : ctx.orbits().orbits) {
      if (o.rank % 2 != 0) throw std::logic_error("odd form rank");
      if (o.size() != pow_u64(q, o.rank))
        throw std::logic_error("orbit size is not q^rank");
      int rep_rank = form_matrix(ctx.algebra(), o.rep).rank;
      if (rep_rank != o.rank) throw std::logic_error("rank differs at the representative");
    }
    return std::string("|O| = q^rank for all orbits") +
           (ctx.orbit_fallback_used() ? " (generator closure fell back to the full group)"
                                      : " (generator closure sufficed)");
  });

  run_stage("orthonormality", [&] {
    for (std::size_t a = 0; a < ctx.orbit_count(); ++a) {
      for (std::size_t b = a; b < ctx.orbit_count(); ++b) {
        Cyclotomic prod = frobenius(ctx, ctx.phi(a), ctx.phi(b));
        Cyclotomic expected = Cyclotomic::integer(p, a == b ? 1 : 0);
        if (!(prod == expected))
          throw std::logic_error("<phi_" + std::to_string(a) + ", phi_" + std::to_string(b) +
                                 "> = " + prod.str());
      }
    }
    return "pairwise Frobenius products are exactly delta";
  });

  run_stage("second-orthogonality", [&] {
    const auto& cc = ctx.classes();
    for (std::size_t cx = 0; cx < cc.count(); ++cx) {
      for (std::size_t cy = 0; cy < cc.count(); ++cy) {
        Cyclotomic sum(p);
        for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi)
          sum += ctx.phi(oi).v[cx] * ctx.phi(oi).v[cy].conjugate();
        long long expected =
            cx == cy ? static_cast<long long>(ctx.group_order() / cc.sizes[cx]) : 0;
        if (!(sum == Cyclotomic::integer(p, expected)))
          throw std::logic_error("column sum at classes " + std::to_string(cx) + "," +
                                 std::to_string(cy) + " is " + sum.str());
      }
    }
    return "column sums equal centralizer orders on the diagonal, 0 off it";
  });

  run_stage("regular-decomposition", [&] {
    if (!regular_decomposition_check(ctx))
      throw std::logic_error("regular character does not decompose as sum of phi(1) phi");
    return "rho_G = sum of phi(1) phi, and sum of squared degrees = |G|";
  });

  run_stage("polarization", [&] {
    for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
      Polarization pol = polarize(ctx, ctx.orbits().orbits[oi].rep);
      OrbitWitness w;
      w.orbit = oi;
      w.f = pol.f;
      w.u = pol.u;
      w.subgroup_order = pol.subgroup_order;
      table.witnesses.push_back(std::move(w));
    }
    return "every orbit representative polarizes with the exact dimension identity";
  });

  run_stage("linear-character", [&] {
    if (table.witnesses.size() != ctx.orbit_count())
      throw std::logic_error("witnesses missing (polarization stage failed)");
    std::string failures;
    for (auto& w : table.witnesses) {
      LinearCharacterData lambda = lambda_class_function(ctx, w.f, w.u);
      w.lambda_values = lambda.on_h.v;
      try {
        verify_lambda_multiplicative(ctx, w.f, w.u);
        if (!(lambda.on_h == ctx.subcontext(w.u).phi(lambda.h_orbit)))
          throw std::logic_error("lambda differs from the singleton-orbit class function");
      } catch (const std::exception& ex) {
        if (!failures.empty()) failures += "; ";
        failures += "orbit " + std::to_string(w.orbit) + ": " + ex.what();
      }
    }
    if (!failures.empty()) throw std::logic_error(failures);
    return "lambda_f is multiplicative and matches its singleton-orbit class function";
  });

  run_stage("induced-equality", [&] {
    for (const auto& w : table.witnesses) {
      if (w.lambda_values.empty()) throw std::logic_error("lambda values missing");
      ClassFunction lambda{w.lambda_values};
      ClassFunction induced = induce_class_function(ctx, w.u, lambda);
      if (!(induced == ctx.phi(w.orbit)))
        throw std::logic_error("induced character differs from phi on orbit " +
                               std::to_string(w.orbit));
    }
    return "lambda_f^G = phi_O pointwise for every orbit";
  });

  run_stage("pairing", [&] {
    for (const auto& w : table.witnesses) {
      Cyclotomic value = pairing_check(ctx, w.orbit, w.f, w.u);
      if (!(value == Cyclotomic::integer(p, 1)))
        throw std::logic_error("pairing value " + value.str() + " on orbit " +
                               std::to_string(w.orbit));
    }
    return "both pairing routes agree and equal 1";
  });

  run_stage("degrees", [&] {
    Rational sum;
    for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
      const Cyclotomic& deg = ctx.phi(oi).degree();
      if (!deg.is_nonnegative_integer()) throw std::logic_error("degree is not a nonnegative integer");
      BigInt d = deg.rational_value().numerator();
      // must be a power of q
      BigInt rest = d;
      while (rest % BigInt(q) == BigInt(0)) rest = rest / BigInt(q);
      if (!(rest == BigInt(1))) throw std::logic_error("degree " + d.str() + " is not a power of q");
      sum += (deg * deg).rational_value();
    }
    if (!(sum == Rational(static_cast<long long>(ctx.group_order()))))
      throw std::logic_error("squared degrees sum to " + sum.str());
    return "all degrees are powers of q and their squares sum to |G|";
  });

  run_stage("conjugation-closure", [&] {
    for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
      Functional neg{vec_scale(F, F.neg(1), ctx.orbits().orbits[oi].rep.c)};
      std::size_t image = ctx.orbit_index_of(neg);
      ClassFunction conj;
      conj.v.reserve(ctx.class_count());
      for (const auto& value : ctx.phi(oi).v) conj.v.push_back(value.conjugate());
      if (!(conj == ctx.phi(image)))
        throw std::logic_error("conjugate of phi_" + std::to_string(oi) +
                               " is not phi of the negated orbit");
    }
    return "conjugating rows permutes the table along f -> -f";
  });

  table.all_passed = true;
  for (const auto& stage : table.stages) table.all_passed = table.all_passed && stage.passed;
  return table;
}

BranchReport clifford_branching_check(Context& ctx, std::size_t max_subgroups) {
  const Field& F = ctx.field();
  const int p = F.p();
  const int q = F.q();

  CertifiedTable own = certify_irreducible_table(ctx);
  if (!own.all_passed) throw std::logic_error("branching: the table itself failed certification");

  BranchReport report;
  auto all_maximal = ctx.algebra().maximal_mult_closed_subspaces();
  for (std::size_t i = 0; i < all_maximal.size() && i < max_subgroups; ++i)
    report.subgroups.push_back(all_maximal[i]);

  for (std::size_t si = 0; si < report.subgroups.size(); ++si) {
    const Subspace& u = report.subgroups[si];
    Context& h = ctx.subcontext(u);
    CertifiedTable sub = certify_irreducible_table(h);
    report.subgroup_certified.push_back(sub.all_passed);

    // the q linear characters trivial on H, one per multiple of e*
    ComplementData cd = complement_data(ctx.algebra(), u);
    std::vector<std::size_t> trivial_on_h;
    for (int beta = 0; beta < q; ++beta) {
      Functional g{vec_scale(F, static_cast<Field::elt>(beta), cd.e_star.c)};
      std::size_t oi = ctx.orbit_index_of(g);
      if (ctx.orbits().orbits[oi].size() != 1)
        throw std::logic_error("branching: multiple of e* is not a singleton orbit");
      ClassFunction restricted = restrict_class_function(ctx, u, ctx.phi(oi));
      for (const auto& value : restricted.v)
        if (!(value == Cyclotomic::integer(p, 1)))
          throw std::logic_error("branching: quotient character is not trivial on H");
      trivial_on_h.push_back(oi);
    }

    std::vector<ClassFunction> restrictions;
    restrictions.reserve(ctx.orbit_count());
    for (std::size_t gi = 0; gi < ctx.orbit_count(); ++gi)
      restrictions.push_back(restrict_class_function(ctx, u, ctx.phi(gi)));

    for (std::size_t gi = 0; gi < ctx.orbit_count(); ++gi) {
      const ClassFunction& chi_h = restrictions[gi];
      Cyclotomic norm = frobenius(h, chi_h, chi_h);

      // decomposition in Irr(H): multiplicities must be 0/1 integers
      std::vector<std::size_t> constituents;
      for (std::size_t hj = 0; hj < h.orbit_count(); ++hj) {
        Cyclotomic m = frobenius(h, chi_h, h.phi(hj));
        if (m == Cyclotomic::integer(p, 0)) continue;
        if (!(m == Cyclotomic::integer(p, 1)))
          throw std::logic_error("branching: restriction multiplicity is not 0 or 1");
        constituents.push_back(hj);
      }

      // the twists of chi by the quotient characters, located in the table
      std::vector<std::size_t> twists;
      for (auto ti : trivial_on_h) {
        ClassFunction product;
        product.v.reserve(ctx.class_count());
        for (std::size_t c = 0; c < ctx.class_count(); ++c)
          product.v.push_back(ctx.phi(ti).v[c] * ctx.phi(gi).v[c]);
        bool found = false;
        for (std::size_t gj = 0; gj < ctx.orbit_count(); ++gj) {
          if (product == ctx.phi(gj)) {
            twists.push_back(gj);
            found = true;
            break;
          }
        }
        if (!found) throw std::logic_error("branching: twist is not an irreducible");
      }
      std::sort(twists.begin(), twists.end());

      BranchEntry entry;
      entry.subgroup = si;
      entry.chi = gi;
      if (norm == Cyclotomic::integer(p, 1)) {
        entry.branch = 1;
        if (constituents.size() != 1)
          throw std::logic_error("branching: norm-1 restriction is not a single irreducible");
        // induced back up: q distinct constituents, exactly the twists
        ClassFunction induced = induce_class_function(ctx, u, h.phi(constituents.front()));
        std::vector<std::size_t> up;
        for (std::size_t gj = 0; gj < ctx.orbit_count(); ++gj) {
          Cyclotomic m = frobenius(ctx, induced, ctx.phi(gj));
          if (m == Cyclotomic::integer(p, 0)) continue;
          if (!(m == Cyclotomic::integer(p, 1)))
            throw std::logic_error("branching: induced multiplicity is not 0 or 1");
          up.push_back(gj);
        }
        if (up.size() != static_cast<std::size_t>(q))
          throw std::logic_error("branching: induced character does not have q constituents");
        if (twists != up)
          throw std::logic_error("branching: induced constituents differ from the twists");
      } else if (norm == Cyclotomic::integer(p, q)) {
        entry.branch = 2;
        if (constituents.size() != static_cast<std::size_t>(q))
          throw std::logic_error("branching: norm-q restriction does not have q constituents");
        for (auto hj : constituents) {
          ClassFunction induced = induce_class_function(ctx, u, h.phi(hj));
          if (!(induced == ctx.phi(gi)))
            throw std::logic_error("branching: constituent does not induce back to chi");
        }
      } else {
        throw std::logic_error("branching: restriction norm " + norm.str() +
                               " is neither 1 nor q");
      }

      // cross products: a norm-1 restriction meets exactly its twists, a
      // norm-q restriction meets only itself
      for (std::size_t gj = 0; gj < ctx.orbit_count(); ++gj) {
        Cyclotomic cross = frobenius(h, chi_h, restrictions[gj]);
        bool expected_nonzero =
            entry.branch == 1 ? std::binary_search(twists.begin(), twists.end(), gj)
                              : gj == gi;
        if (expected_nonzero == (cross == Cyclotomic::integer(p, 0)))
          throw std::logic_error("branching: cross-restriction support is wrong");
      }
      report.entries.push_back(entry);
    }
  }
  return report;
}

}  // namespace algroup
