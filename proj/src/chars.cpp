#include "algroup/chars.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace algroup {

namespace {

void require_maximal(const Algebra& A, const Subspace& u) {
  if (u.ambient() != A.dim() || u.dim() != A.dim() - 1)
    throw std::invalid_argument("subspace is not a hyperplane of J");
  const auto& powers = A.radical_powers();
  if (powers.size() >= 2 && !u.contains(A.field(), powers[1]))
    throw std::invalid_argument("hyperplane does not contain J^2");
  if (!A.is_mult_closed(u))
    throw std::invalid_argument("subspace is not multiplicatively closed");
}

// coadjoint action of x in G on the dual of U (U must be an ideal)
FqVec act_on_sub_dual(const Algebra& A, const Subspace& u, const GroupElement& x,
                      const FqVec& f0) {
  GroupElement xinv = ginv(A, x);
  FqVec out(u.dim(), 0);
  for (int k = 0; k < u.dim(); ++k) {
    FqVec r = u.basis().row(k);
    // x^(-1) r x
    FqVec image = A.add(r, A.mul(xinv.a, r));
    image = A.add(image, A.mul(image, x.a));
    out[k] = dot(A.field(), f0, u.coords_of(A.field(), image));
  }
  return out;
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// sorted packed restrictions of the orbit members
std::vector<std::uint64_t> projected_image(Context& ctx, const CoadjointOrbit& orbit,
                                           const Subspace& u) {
  const Field& F = ctx.field();
  std::vector<std::uint64_t> image;
  image.reserve(orbit.members.size());
  for (auto packed : orbit.members) {
    Functional f{unpack_coords(packed, F.q(), ctx.algebra().dim())};
    image.push_back(pack_coords(project_functional(F, u, f), F.q()));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

// all of J* lying over the given H-orbit, as sorted packed functionals
std::vector<std::uint64_t> preimage_of_h_orbit(Context& ctx, const Subspace& u,
                                               const CoadjointOrbit& h_orbit) {
  const Field& F = ctx.field();
  const int n = ctx.algebra().dim();
  Subspace perp = u.annihilator(F);
  std::vector<std::uint64_t> result;
  for (auto packed : h_orbit.members) {
    FqVec g0 = unpack_coords(packed, F.q(), u.dim());
    // lift placing the restricted values at the pivot coordinates
    FqVec lift(n, 0);
    for (int k = 0; k < u.dim(); ++k) lift[u.pivots()[k]] = g0[k];
    for (std::uint64_t ci = 0; ci < pow_u64(F.q(), perp.dim()); ++ci) {
      FqVec member = vec_add(F, lift, perp.from_coords(F, unpack_coords(ci, F.q(), perp.dim())));
      result.push_back(pack_coords(member, F.q()));
    }
  }
  std::sort(result.begin(), result.end());
  if (std::adjacent_find(result.begin(), result.end()) != result.end())
    throw std::logic_error("preimage fibers are not disjoint");
  return result;
}

}  // namespace

FqVec project_functional(const Field& F, const Subspace& u, const Functional& f) {
  FqVec out(u.dim(), 0);
  for (int k = 0; k < u.dim(); ++k) out[k] = dot(F, f.c, u.basis().row(k));
  return out;
}

std::vector<Functional> fiber(const Algebra& A, const Subspace& u, const Functional& f) {
  require_maximal(A, u);
  Subspace perp = u.annihilator(A.field());
  std::vector<Functional> out;
  for (int alpha = 0; alpha < A.field().q(); ++alpha) {
    FqVec shift = vec_scale(A.field(), static_cast<Field::elt>(alpha), perp.basis().row(0));
    out.push_back(Functional{vec_add(A.field(), f.c, shift)});
  }
  return out;
}

ComplementData complement_data(const Algebra& A, const Subspace& u) {
  require_maximal(A, u);
  const Field& F = A.field();
  // the single non-pivot coordinate spans a complement of U
  std::vector<bool> is_pivot(A.dim(), false);
  for (int p : u.pivots()) is_pivot[p] = true;
  int free = 0;
  while (free < A.dim() && is_pivot[free]) ++free;
  ComplementData cd;
  cd.e = A.basis_vec(free);
  Subspace perp = u.annihilator(F);
  FqVec g = perp.basis().row(0);
  Field::elt at_e = dot(F, g, cd.e);
  // g(e) != 0, else g would vanish on U + F_q e = J
  cd.e_star = Functional{vec_scale(F, F.inv(at_e), g)};
  return cd;
}

OrbitProjectionReport classify_orbit(Context& ctx, std::size_t orbit, const Subspace& u) {
  require_maximal(ctx.algebra(), u);
  const Field& F = ctx.field();
  const int q = F.q();
  const int n = ctx.algebra().dim();
  const CoadjointOrbit& o = ctx.orbits().orbits[orbit];
  Context& h = ctx.subcontext(u);
  const Algebra& S = h.algebra();

  OrbitProjectionReport report;
  report.orbit = orbit;
  report.u = u;

  auto image = projected_image(ctx, o, u);
  report.pi_image_size = image.size();
  if (o.size() == image.size()) {
    report.type = OrbitType::I;
  } else if (o.size() == static_cast<std::uint64_t>(q) * image.size()) {
    report.type = OrbitType::II;
  } else {
    throw std::logic_error("orbit/projection sizes satisfy neither alternative");
  }

  // fiber dichotomy, member by member: the fiber of f meets O in exactly
  // {f} (type I) or lies inside O entirely (type II)
  for (auto packed : o.members) {
    Functional f{unpack_coords(packed, q, n)};
    int inside = 0;
    for (const auto& g : fiber(ctx.algebra(), u, f))
      if (ctx.orbit_index_of(g) == orbit) ++inside;
    int expected = report.type == OrbitType::I ? 1 : q;
    if (inside != expected)
      throw std::logic_error("fiber meets the orbit in " + std::to_string(inside) +
                             " points, expected " + std::to_string(expected));
  }

  // size, radical and centralizer characterizations must all agree
  Functional f = o.rep;
  FqVec f0 = project_functional(F, u, f);
  std::size_t h_orbit = h.orbit_index_of(Functional{f0});
  const CoadjointOrbit& o0 = h.orbits().orbits[h_orbit];
  report.dim_rad_f = n - o.rank;
  report.dim_rad_f0 = S.dim() - o0.rank;
  std::uint64_t cent_g = pow_u64(q, report.dim_rad_f);
  std::uint64_t cent_h = pow_u64(q, report.dim_rad_f0);
  const bool type1 = report.type == OrbitType::I;
  bool size_ok = type1 ? o.size() == o0.size()
                       : o.size() == static_cast<std::uint64_t>(q) * q * o0.size();
  bool rad_ok = type1 ? report.dim_rad_f == report.dim_rad_f0 + 1
                      : report.dim_rad_f == report.dim_rad_f0 - 1;
  bool cent_ok = type1 ? cent_g == static_cast<std::uint64_t>(q) * cent_h
                       : static_cast<std::uint64_t>(q) * cent_g == cent_h;
  if (!size_ok || !rad_ok || !cent_ok)
    throw std::logic_error("orbit type characterizations disagree on orbit " +
                           std::to_string(orbit));

  if (type1) {
    // the image is the single H-orbit of the restriction
    std::vector<std::uint64_t> o0_members(o0.members.begin(), o0.members.end());
    if (image != o0_members)
      throw std::logic_error("type I projection is not a single H-orbit");
    report.suborbits = {h_orbit};
  } else {
    // the image splits into q distinct H-orbits, the coset translates of O_0
    ComplementData cd = complement_data(ctx.algebra(), u);
    std::vector<std::uint64_t> united;
    for (int alpha = 0; alpha < q; ++alpha) {
      GroupElement x{ctx.algebra().scale(static_cast<Field::elt>(alpha), cd.e)};
      FqVec moved = act_on_sub_dual(ctx.algebra(), u, x, f0);
      std::size_t sub = h.orbit_index_of(Functional{moved});
      const CoadjointOrbit& oa = h.orbits().orbits[sub];
      if (oa.size() * q * q != o.size())
        throw std::logic_error("coset suborbit has the wrong size");
      // the suborbit is the translate of O_0 by the coset representative
      std::vector<std::uint64_t> translated;
      for (auto packed : o0.members) {
        FqVec g0 = unpack_coords(packed, q, u.dim());
        translated.push_back(pack_coords(act_on_sub_dual(ctx.algebra(), u, x, g0), q));
      }
      std::sort(translated.begin(), translated.end());
      std::vector<std::uint64_t> oa_members(oa.members.begin(), oa.members.end());
      if (translated != oa_members)
        throw std::logic_error("coset suborbit is not the translate of the base H-orbit");
      report.suborbits.push_back(sub);
      united.insert(united.end(), oa_members.begin(), oa_members.end());
    }
    auto distinct = report.suborbits;
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
      throw std::logic_error("coset suborbits are not distinct");
    std::sort(united.begin(), united.end());
    if (united != image)
      throw std::logic_error("coset suborbits do not cover the projected image");
  }
  return report;
}

RestrictionReport restrict_phi(Context& ctx, std::size_t orbit, const Subspace& u) {
  RestrictionReport report;
  report.classification = classify_orbit(ctx, orbit, u);
  report.restricted = restrict_class_function(ctx, u, ctx.phi(orbit));
  report.constituents = report.classification.suborbits;

  Context& h = ctx.subcontext(u);
  const int p = ctx.field().p();
  ClassFunction expected;
  expected.v.assign(h.class_count(), Cyclotomic(p));
  for (auto sub : report.constituents)
    for (std::size_t hc = 0; hc < h.class_count(); ++hc) expected.v[hc] += h.phi(sub).v[hc];
  if (!(expected == report.restricted))
    throw std::logic_error("restriction of phi does not match the predicted H-orbit sum");

  if (report.classification.type == OrbitType::II) {
    // each summand is the coset twist of the base one:
    // phi_alpha(x) = phi_0(x_alpha^(-1) x x_alpha)
    ComplementData cd = complement_data(ctx.algebra(), u);
    const Field& F = ctx.field();
    std::size_t base = report.constituents.front();
    for (int alpha = 0; alpha < F.q(); ++alpha) {
      GroupElement xa{ctx.algebra().scale(static_cast<Field::elt>(alpha), cd.e)};
      std::size_t sub = report.constituents[alpha];
      for (std::size_t hc = 0; hc < h.class_count(); ++hc) {
        GroupElement y{u.from_coords(F, h.classes().reps[hc])};
        GroupElement conj = gconj(ctx.algebra(), y, xa);
        std::uint32_t conj_class = h.classes().class_of[pack_coords(
            u.coords_of(F, conj.a), F.q())];
        if (!(h.phi(sub).v[hc] == h.phi(base).v[conj_class]))
          throw std::logic_error("coset twist identity fails for the restriction");
      }
    }
  }
  return report;
}

InductionReport induce_phi(Context& ctx, const Subspace& u, std::size_t h_orbit) {
  require_maximal(ctx.algebra(), u);
  Context& h = ctx.subcontext(u);
  const Field& F = ctx.field();
  const int q = F.q();
  const CoadjointOrbit& o0 = h.orbits().orbits[h_orbit];

  InductionReport report;
  report.induced = induce_class_function(ctx, u, h.phi(h_orbit));

  auto preimage = preimage_of_h_orbit(ctx, u, o0);
  std::vector<std::size_t> candidates;
  for (auto packed : preimage) candidates.push_back(ctx.orbits().orbit_of[packed]);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // all orbits over O_0 share one type with respect to U
  std::vector<OrbitType> types;
  for (auto oi : candidates) {
    const CoadjointOrbit& o = ctx.orbits().orbits[oi];
    auto image = projected_image(ctx, o, u);
    types.push_back(o.size() == image.size() ? OrbitType::I : OrbitType::II);
  }
  for (auto t : types)
    if (t != types.front()) throw std::logic_error("orbits over one H-orbit have mixed types");
  report.type = types.front();

  const int p = F.p();
  if (report.type == OrbitType::II) {
    if (candidates.size() != 1)
      throw std::logic_error("type II induction sees more than one orbit upstairs");
    report.constituents = candidates;
    if (!(report.induced == ctx.phi(candidates.front())))
      throw std::logic_error("type II induced function differs from phi");
  } else {
    if (candidates.size() != static_cast<std::size_t>(q))
      throw std::logic_error("type I induction expects q distinct orbits upstairs, found " +
                             std::to_string(candidates.size()));
    // explicit construction: shift a fixed preimage point along e*
    ComplementData cd = complement_data(ctx.algebra(), u);
    Functional f1{unpack_coords(preimage.front(), q, ctx.algebra().dim())};
    std::vector<std::size_t> shifted;
    for (int alpha = 0; alpha < q; ++alpha) {
      FqVec g = vec_add(F, f1.c, vec_scale(F, static_cast<Field::elt>(alpha), cd.e_star.c));
      shifted.push_back(ctx.orbit_index_of(Functional{g}));
    }
    report.constituents = shifted;
    auto sorted = shifted;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("type I shifted orbits are not distinct");
    if (sorted != candidates)
      throw std::logic_error("type I shifted orbits do not exhaust the preimage orbits");
    ClassFunction expected;
    expected.v.assign(ctx.class_count(), Cyclotomic(p));
    for (auto oi : shifted)
      for (std::size_t c = 0; c < ctx.class_count(); ++c) expected.v[c] += ctx.phi(oi).v[c];
    if (!(expected == report.induced))
      throw std::logic_error("type I induced function differs from the orbit sum");
  }
  return report;
}

bool inverse_image_check(Context& ctx, const Subspace& u, std::size_t h_orbit) {
  require_maximal(ctx.algebra(), u);
  Context& h = ctx.subcontext(u);
  const CoadjointOrbit& o0 = h.orbits().orbits[h_orbit];
  auto preimage = preimage_of_h_orbit(ctx, u, o0);

  std::vector<std::size_t> candidates;
  for (auto packed : preimage) candidates.push_back(ctx.orbits().orbit_of[packed]);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const CoadjointOrbit& first = ctx.orbits().orbits[candidates.front()];
  auto image = projected_image(ctx, first, u);
  OrbitType type = first.size() == image.size() ? OrbitType::I : OrbitType::II;

  if (type == OrbitType::I) {
    // disjoint union of exactly q distinct orbits
    if (candidates.size() != static_cast<std::size_t>(ctx.field().q())) return false;
    std::vector<std::uint64_t> united;
    for (auto oi : candidates) {
      const auto& members = ctx.orbits().orbits[oi].members;
      united.insert(united.end(), members.begin(), members.end());
    }
    std::sort(united.begin(), united.end());
    return united == preimage;
  }
  // type II: a proper subset of the single orbit upstairs
  if (candidates.size() != 1) return false;
  for (auto packed : preimage)
    if (ctx.orbits().orbit_of[packed] != candidates.front()) return false;
  return preimage.size() < first.size();
}

}  // namespace algroup
