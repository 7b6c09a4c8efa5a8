#include "algroup/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace algroup {

Algebra::Algebra(Field field, int n, std::vector<std::vector<FqVec>> table, std::string name)
    : field_(std::move(field)), n_(n), table_(std::move(table)), name_(std::move(name)) {
  if (n_ < 0) throw std::invalid_argument("algebra: negative dimension");
  if (static_cast<int>(table_.size()) != n_)
    throw std::invalid_argument("algebra: structure table has wrong shape");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n_)
      throw std::invalid_argument("algebra: structure table has wrong shape");
    for (const auto& v : row) {
      if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("algebra: structure table has wrong shape");
      for (auto c : v)
        if (c >= field_.q())
          throw std::invalid_argument("algebra: structure constant out of field range");
    }
  }
  validate();
}

std::uint64_t Algebra::space_size() const {
  std::uint64_t size = 1;
  for (int i = 0; i < n_; ++i) {
    if (size > (std::uint64_t(1) << 62) / field_.q())
      throw std::overflow_error("algebra: q^n exceeds 2^62");
    size *= field_.q();
  }
  return size;
}

FqVec Algebra::basis_vec(int i) const {
  FqVec v(n_, 0);
  v[i] = 1;
  return v;
}

FqVec Algebra::mul(const FqVec& a, const FqVec& b) const {
  FqVec r(n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      Field::elt c = field_.mul(a[i], b[j]);
      const FqVec& e = table_[i][j];
      for (int k = 0; k < n_; ++k)
        if (e[k] != 0) r[k] = field_.add(r[k], field_.mul(c, e[k]));
    }
  }
  return r;
}

FqVec Algebra::bracket(const FqVec& a, const FqVec& b) const {
  return sub(mul(a, b), mul(b, a));
}

void Algebra::validate() {
  // associativity on all basis triples
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        FqVec left = mul(table_[i][j], basis_vec(k));
        FqVec right = mul(basis_vec(i), table_[j][k]);
        if (left != right)
          throw std::invalid_argument("algebra: structure constants are not associative at basis triple (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + ")");
      }
    }
  }
  // nilpotency: powers must strictly decrease to zero
  powers_.clear();
  Subspace current = Subspace::full(n_);
  if (n_ == 0) return;
  powers_.push_back(current);
  while (true) {
    Subspace next = product_span(powers_.back(), powers_.front());
    if (next.dim() == 0) break;
    if (next.dim() >= powers_.back().dim())
      throw std::invalid_argument("algebra: not nilpotent (power chain stalls at dimension " +
                                  std::to_string(next.dim()) + ")");
    powers_.push_back(next);
  }
}

Subspace Algebra::product_span(const Subspace& u, const Subspace& v) const {
  Mat products(0, n_);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j)
      products.append_row(mul(u.basis().row(i), v.basis().row(j)));
  if (products.cols == 0) products.cols = n_;
  return Subspace::span_rows(field_, products);
}

bool Algebra::is_mult_closed(const Subspace& u) const {
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < u.dim(); ++j)
      if (!u.contains(field_, mul(u.basis().row(i), u.basis().row(j)))) return false;
  return true;
}

bool Algebra::is_ideal(const Subspace& u) const {
  for (int i = 0; i < u.dim(); ++i) {
    FqVec row = u.basis().row(i);
    for (int j = 0; j < n_; ++j) {
      if (!u.contains(field_, mul(row, basis_vec(j)))) return false;
      if (!u.contains(field_, mul(basis_vec(j), row))) return false;
    }
  }
  return true;
}

IdealChain Algebra::maximal_ideal_chain() const {
  IdealChain chain;
  Subspace current = Subspace::zero(n_);
  chain.steps.push_back(current);
  // walk the radical powers bottom-up: ... J^3, J^2, J
  for (std::size_t pi = powers_.size(); pi-- > 0;) {
    const Subspace& target = powers_[pi];
    while (current.dim() < target.dim()) {
      bool extended = false;
      for (int i = 0; i < target.dim() && !extended; ++i) {
        FqVec row = target.basis().row(i);
        if (!current.contains(field_, row)) {
          Mat m = current.basis();
          if (m.cols == 0) m.cols = n_;
          m.append_row(row);
          current = Subspace::span_rows(field_, m);
          chain.steps.push_back(current);
          extended = true;
        }
      }
      if (!extended) throw std::logic_error("algebra: chain refinement stalled");
    }
  }
  for (const auto& step : chain.steps)
    if (!is_ideal(step)) throw std::logic_error("algebra: chain step is not an ideal");
  return chain;
}

std::vector<Subspace> Algebra::maximal_mult_closed_subspaces() const {
  if (n_ < 1) throw std::invalid_argument("algebra: dimension must be >= 1");
  // hyperplanes containing J^2 = kernels of nonzero functionals vanishing
  // on J^2, one functional per projective point of (J^2)_perp
  Subspace j2 = powers_.size() >= 2 ? powers_[1] : Subspace::zero(n_);
  Subspace perp = j2.annihilator(field_);
  const int d = perp.dim();
  const int q = field_.q();
  std::vector<Subspace> result;
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    FqVec combo = unpack_coords(idx, q, d);
    // normalize: accept only representatives whose first nonzero entry is 1
    int first = 0;
    while (combo[first] == 0) ++first;
    if (combo[first] != 1) continue;
    FqVec functional = perp.from_coords(field_, combo);
    Mat m(0, n_);
    m.append_row(functional);
    Subspace hyper = Subspace::span_rows(field_, nullspace(field_, m));
    result.push_back(std::move(hyper));
  }
  std::sort(result.begin(), result.end(),
            [](const Subspace& a, const Subspace& b) { return a.key() < b.key(); });
  return result;
}

Algebra Algebra::subalgebra(const Subspace& u, std::string name) const {
  if (!is_mult_closed(u))
    throw std::invalid_argument("algebra: subspace is not multiplicatively closed");
  const int d = u.dim();
  std::vector<std::vector<FqVec>> table(d, std::vector<FqVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      table[i][j] = u.coords_of(field_, mul(u.basis().row(i), u.basis().row(j)));
  return Algebra(field_, d, std::move(table), std::move(name));
}

Algebra Algebra::upper_triangular(const Field& F, int matrix_size) {
  if (matrix_size < 2) throw std::invalid_argument("u_n: matrix size must be >= 2");
  std::vector<std::pair<int, int>> positions;
  for (int diag = 1; diag < matrix_size; ++diag)
    for (int i = 1; i + diag <= matrix_size; ++i) positions.emplace_back(i, i + diag);
  return pattern(F, matrix_size, std::move(positions),
                 "u" + std::to_string(matrix_size) + "(" + std::to_string(F.q()) + ")");
}

Algebra Algebra::truncated_polynomial(const Field& F, int power) {
  if (power < 2) throw std::invalid_argument("trunc: power must be >= 2");
  const int n = power - 1;  // basis t, t^2, ..., t^(power-1)
  std::vector<std::vector<FqVec>> table(n, std::vector<FqVec>(n, FqVec(n, 0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i + j <= n) table[i - 1][j - 1][i + j - 1] = 1;
  return Algebra(F, n, std::move(table),
                 "trunc(" + std::to_string(F.q()) + "," + std::to_string(power) + ")");
}

Algebra Algebra::pattern(const Field& F, int matrix_size,
                         std::vector<std::pair<int, int>> positions, std::string name) {
  for (auto [i, j] : positions)
    if (i < 1 || j <= i || j > matrix_size)
      throw std::invalid_argument("pattern: position (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") is not strictly upper triangular");
  std::sort(positions.begin(), positions.end(), [](auto a, auto b) {
    return std::make_pair(a.second - a.first, a.first) < std::make_pair(b.second - b.first, b.first);
  });
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  const int n = static_cast<int>(positions.size());
  auto index_of = [&](int i, int j) {
    for (int k = 0; k < n; ++k)
      if (positions[k] == std::make_pair(i, j)) return k;
    return -1;
  };
  std::vector<std::vector<FqVec>> table(n, std::vector<FqVec>(n, FqVec(n, 0)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto [i, j] = positions[a];
      auto [k, l] = positions[b];
      if (j != k) continue;  // E_ij E_kl = 0 unless j = k
      int target = index_of(i, l);
      if (target < 0)
        throw std::invalid_argument("pattern: not closed under composition: (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")*(" + std::to_string(k) + "," +
                                    std::to_string(l) + ") needs (" + std::to_string(i) + "," +
                                    std::to_string(l) + ")");
      table[a][b][target] = 1;
    }
  }
  if (positions.empty()) throw std::invalid_argument("pattern: empty position set");
  if (name.empty()) {
    name = "pattern(" + std::to_string(F.q()) + ";";
    for (std::size_t k = 0; k < positions.size(); ++k) {
      name += (k ? "," : "") + std::to_string(positions[k].first) + "-" +
              std::to_string(positions[k].second);
    }
    name += ")";
  }
  return Algebra(F, n, std::move(table), std::move(name));
}

}  // namespace algroup
