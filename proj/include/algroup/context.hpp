#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "algroup/coadjoint.hpp"
#include "algroup/cyclo.hpp"

namespace algroup {

struct Options {
  std::uint64_t max_group_order = std::uint64_t(1) << 20;
  int threads = 1;
};

// Class function on G, one exact value per conjugacy class (class order as in
// ConjugacyClasses, identity first).
struct ClassFunction {
  std::vector<Cyclotomic> v;
  bool operator==(const ClassFunction&) const = default;
  const Cyclotomic& degree() const { return v.front(); }
};

// Computation session for one algebra group: conjugacy classes, coadjoint
// orbits, the orbit class functions, and memoized subgroup sessions keyed by
// the echelon basis of the defining subspace. Lazy getters are not
// thread-safe; internal parallelism only ever touches immutable inputs.
class Context {
 public:
  explicit Context(Algebra algebra, Options opts = {});

  const Algebra& algebra() const { return A_; }
  const Field& field() const { return A_.field(); }
  const Options& options() const { return opts_; }
  std::uint64_t group_order() const { return A_.space_size(); }

  const ConjugacyClasses& classes();
  std::size_t class_count() { return classes().count(); }
  std::uint32_t class_of(const GroupElement& x);

  // also asserts |Omega(G)| equals the class number
  const OrbitSet& orbits();
  std::size_t orbit_count() { return orbits().orbits.size(); }
  std::uint32_t orbit_index_of(const Functional& f);
  bool orbit_fallback_used() { return orbits().any_fallback; }

  const std::vector<ClassFunction>& phi_table();
  const ClassFunction& phi(std::size_t orbit) { return phi_table()[orbit]; }

  std::uint64_t adjoint_count();

  const IdealChain& chain();

  // session for the algebra subgroup 1+U (U multiplicatively closed)
  Context& subcontext(const Subspace& u);

  struct Fusion {
    Subspace u;
    std::vector<std::vector<std::uint64_t>> count;  // [G class][H class]
    std::vector<std::uint32_t> gclass_of_hclass;
  };
  const Fusion& fusion(const Subspace& u);

 private:
  Algebra A_;
  Options opts_;
  std::optional<ConjugacyClasses> classes_;
  std::optional<OrbitSet> orbits_;
  std::optional<std::vector<ClassFunction>> phis_;
  std::optional<IdealChain> chain_;
  std::optional<std::uint64_t> adjoint_count_;
  std::map<std::vector<std::uint8_t>, std::unique_ptr<Context>> children_;
  std::map<std::vector<std::uint8_t>, Fusion> fusions_;
};

// Exact Frobenius scalar product (1/|G|) sum over classes of
// size * u * conj(v).
Cyclotomic frobenius(Context& ctx, const ClassFunction& u, const ClassFunction& v);

// Column sum over all orbits of phi(x) * conj(phi(y)); equals |C_G(x)| when x
// and y are conjugate and 0 otherwise.
Cyclotomic second_orthogonality_sum(Context& ctx, const GroupElement& x, const GroupElement& y);

// Checks rho_G = sum of phi(1) * phi exactly, and sum of squared degrees.
bool regular_decomposition_check(Context& ctx);

// Value of phi_O at an arbitrary group element, evaluated directly from the
// orbit sum (independent of the class-indexed table).
Cyclotomic phi_value_at(Context& ctx, std::size_t orbit, const GroupElement& x);

// Induction of a class function from H = 1+U to G via the raw group-average
// formula; conjugates of g sweep its class uniformly, so the sum collapses to
// class counts.
ClassFunction induce_class_function(Context& ctx, const Subspace& u, const ClassFunction& on_h);

// Restriction of a class function on G to H = 1+U, indexed by H classes.
ClassFunction restrict_class_function(Context& ctx, const Subspace& u, const ClassFunction& on_g);

}  // namespace algroup
