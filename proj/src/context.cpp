#include "algroup/context.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace algroup {

namespace {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr error;
  std::mutex error_mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Context::Context(Algebra algebra, Options opts) : A_(std::move(algebra)), opts_(opts) {}

const ConjugacyClasses& Context::classes() {
  if (!classes_) classes_ = conjugacy_classes(A_, opts_.max_group_order);
  return *classes_;
}

std::uint32_t Context::class_of(const GroupElement& x) {
  return classes().class_of[pack_element(A_, x)];
}

const OrbitSet& Context::orbits() {
  if (!orbits_) {
    orbits_ = all_orbits(A_, opts_.max_group_order);
    if (orbits_->orbits.size() != classes().count())
      throw std::logic_error("context: orbit count " + std::to_string(orbits_->orbits.size()) +
                             " differs from class number " + std::to_string(classes().count()));
  }
  return *orbits_;
}

std::uint32_t Context::orbit_index_of(const Functional& f) {
  return orbits().orbit_of[pack_coords(f.c, A_.field().q())];
}

const std::vector<ClassFunction>& Context::phi_table() {
  if (phis_) return *phis_;
  const auto& cc = classes();
  const auto& os = orbits();
  const int p = A_.field().p();
  const int q = A_.field().q();
  const int n = A_.dim();
  std::vector<ClassFunction> table(os.orbits.size());
  parallel_for(os.orbits.size(), opts_.threads, [&](std::size_t oi) {
    const CoadjointOrbit& orbit = os.orbits[oi];
    // accumulate root-of-unity exponent counts per class, then assemble once
    std::vector<std::vector<long long>> counts(cc.count(), std::vector<long long>(p, 0));
    for (auto packed : orbit.members) {
      Functional f{unpack_coords(packed, q, n)};
      for (std::size_t c = 0; c < cc.count(); ++c)
        ++counts[c][A_.field().psi_exponent(eval_functional(A_.field(), f, cc.reps[c]))];
    }
    const std::uint64_t degree = pow_u64(q, orbit.rank / 2);
    const Rational scale(BigInt(1), BigInt(static_cast<long long>(degree)));
    ClassFunction cf;
    cf.v.reserve(cc.count());
    for (std::size_t c = 0; c < cc.count(); ++c)
      cf.v.push_back(Cyclotomic::from_root_counts(p, counts[c]).scaled(scale));
    if (!(cf.degree() == Cyclotomic::integer(p, static_cast<long long>(degree))))
      throw std::logic_error("context: phi degree differs from q^(rank/2)");
    table[oi] = std::move(cf);
  });
  phis_ = std::move(table);
  return *phis_;
}

std::uint64_t Context::adjoint_count() {
  if (!adjoint_count_) adjoint_count_ = adjoint_orbit_count(A_, opts_.max_group_order);
  return *adjoint_count_;
}

const IdealChain& Context::chain() {
  if (!chain_) chain_ = A_.maximal_ideal_chain();
  return *chain_;
}

Context& Context::subcontext(const Subspace& u) {
  auto key = u.key();
  auto it = children_.find(key);
  if (it == children_.end()) {
    Algebra sub = A_.subalgebra(u, A_.name() + "|U" + std::to_string(u.dim()));
    it = children_.emplace(std::move(key), std::make_unique<Context>(std::move(sub), opts_)).first;
  }
  return *it->second;
}

const Context::Fusion& Context::fusion(const Subspace& u) {
  auto key = u.key();
  auto it = fusions_.find(key);
  if (it != fusions_.end()) return it->second;

  Context& h = subcontext(u);
  Fusion fu;
  fu.u = u;
  fu.count.assign(class_count(), std::vector<std::uint64_t>(h.class_count(), 0));
  const std::uint64_t h_size = h.group_order();
  const int q = A_.field().q();
  for (std::uint64_t hi = 0; hi < h_size; ++hi) {
    FqVec sub_coords = unpack_coords(hi, q, u.dim());
    FqVec a = u.from_coords(A_.field(), sub_coords);
    std::uint32_t gc = classes().class_of[pack_coords(a, q)];
    std::uint32_t hc = h.classes().class_of[hi];
    ++fu.count[gc][hc];
  }
  fu.gclass_of_hclass.resize(h.class_count());
  for (std::size_t hc = 0; hc < h.class_count(); ++hc) {
    FqVec a = u.from_coords(A_.field(), h.classes().reps[hc]);
    fu.gclass_of_hclass[hc] = classes().class_of[pack_coords(a, q)];
  }
  return fusions_.emplace(u.key(), std::move(fu)).first->second;
}

Cyclotomic frobenius(Context& ctx, const ClassFunction& u, const ClassFunction& v) {
  const auto& cc = ctx.classes();
  if (u.v.size() != cc.count() || v.v.size() != cc.count())
    throw std::invalid_argument("frobenius: class function size mismatch");
  const int p = ctx.field().p();
  Cyclotomic acc(p);
  for (std::size_t c = 0; c < cc.count(); ++c) {
    if (u.v[c].is_zero() || v.v[c].is_zero()) continue;
    acc += (u.v[c] * v.v[c].conjugate()).scaled(Rational(static_cast<long long>(cc.sizes[c])));
  }
  return acc.scaled(Rational(BigInt(1), BigInt(static_cast<long long>(ctx.group_order()))));
}

Cyclotomic second_orthogonality_sum(Context& ctx, const GroupElement& x, const GroupElement& y) {
  const std::uint32_t cx = ctx.class_of(x);
  const std::uint32_t cy = ctx.class_of(y);
  Cyclotomic acc(ctx.field().p());
  for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi)
    acc += ctx.phi(oi).v[cx] * ctx.phi(oi).v[cy].conjugate();
  return acc;
}

bool regular_decomposition_check(Context& ctx) {
  const int p = ctx.field().p();
  const auto order = static_cast<long long>(ctx.group_order());
  Rational degree_square_sum;
  for (std::size_t c = 0; c < ctx.class_count(); ++c) {
    Cyclotomic acc(p);
    for (std::size_t oi = 0; oi < ctx.orbit_count(); ++oi) {
      const ClassFunction& cf = ctx.phi(oi);
      acc += cf.v[c] * cf.degree();
      if (c == 0) degree_square_sum += (cf.degree() * cf.degree()).rational_value();
    }
    Cyclotomic expected = Cyclotomic::integer(p, c == 0 ? order : 0);
    if (!(acc == expected)) return false;
  }
  return degree_square_sum == Rational(order);
}

Cyclotomic phi_value_at(Context& ctx, std::size_t orbit, const GroupElement& x) {
  const Field& F = ctx.field();
  const CoadjointOrbit& o = ctx.orbits().orbits[orbit];
  std::vector<long long> counts(F.p(), 0);
  for (auto packed : o.members) {
    Functional f{unpack_coords(packed, F.q(), ctx.algebra().dim())};
    ++counts[F.psi_exponent(eval_functional(F, f, x.a))];
  }
  const auto degree = static_cast<long long>(pow_u64(F.q(), o.rank / 2));
  return Cyclotomic::from_root_counts(F.p(), counts).scaled(Rational(BigInt(1), BigInt(degree)));
}

ClassFunction induce_class_function(Context& ctx, const Subspace& u, const ClassFunction& on_h) {
  const auto& fu = ctx.fusion(u);
  Context& h = ctx.subcontext(u);
  if (on_h.v.size() != h.class_count())
    throw std::invalid_argument("induce: class function does not live on H");
  const int p = ctx.field().p();
  const auto& cc = ctx.classes();
  const BigInt g_order(static_cast<long long>(ctx.group_order()));
  const BigInt h_order(static_cast<long long>(h.group_order()));
  ClassFunction out;
  out.v.reserve(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c) {
    Cyclotomic acc(p);
    for (std::size_t hc = 0; hc < h.class_count(); ++hc) {
      const std::uint64_t mult = fu.count[c][hc];
      if (mult == 0 || on_h.v[hc].is_zero()) continue;
      acc += on_h.v[hc].scaled(Rational(static_cast<long long>(mult)));
    }
    Rational scale(g_order, BigInt(static_cast<long long>(cc.sizes[c])) * h_order);
    out.v.push_back(acc.scaled(scale));
  }
  return out;
}

ClassFunction restrict_class_function(Context& ctx, const Subspace& u, const ClassFunction& on_g) {
  const auto& fu = ctx.fusion(u);
  if (on_g.v.size() != ctx.class_count())
    throw std::invalid_argument("restrict: class function does not live on G");
  ClassFunction out;
  out.v.reserve(fu.gclass_of_hclass.size());
  for (auto gc : fu.gclass_of_hclass) out.v.push_back(on_g.v[gc]);
  return out;
}

}  // namespace algroup
