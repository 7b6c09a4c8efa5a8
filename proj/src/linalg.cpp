#include "algroup/linalg.hpp"

#include <stdexcept>

namespace algroup {

std::uint64_t pack_coords(const FqVec& v, int q) {
  std::uint64_t idx = 0;
  for (auto c : v) idx = idx * q + c;
  return idx;
}

FqVec unpack_coords(std::uint64_t idx, int q, int n) {
  FqVec v(n, 0);
  for (int i = n; i-- > 0;) {
    v[i] = static_cast<Field::elt>(idx % q);
    idx /= q;
  }
  return v;
}

FqVec Mat::row(int i) const {
  return FqVec(a.begin() + static_cast<std::size_t>(i) * cols,
               a.begin() + static_cast<std::size_t>(i + 1) * cols);
}

void Mat::append_row(const FqVec& v) {
  if (rows == 0 && cols == 0) cols = static_cast<int>(v.size());
  if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("matrix: row length mismatch");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

Mat transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

FqVec mat_vec(const Field& F, const Mat& m, const FqVec& x) {
  if (static_cast<int>(x.size()) != m.cols) throw std::invalid_argument("matrix: size mismatch");
  FqVec y(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    Field::elt acc = 0;
    for (int j = 0; j < m.cols; ++j) acc = F.add(acc, F.mul(m.at(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Field::elt dot(const Field& F, const FqVec& a, const FqVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector: size mismatch");
  Field::elt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
  return acc;
}

FqVec vec_add(const Field& F, const FqVec& a, const FqVec& b) {
  FqVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

FqVec vec_sub(const Field& F, const FqVec& a, const FqVec& b) {
  FqVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

FqVec vec_scale(const Field& F, Field::elt s, const FqVec& a) {
  FqVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(s, a[i]);
  return r;
}

bool vec_is_zero(const FqVec& a) {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

int rref(const Field& F, Mat& m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Field::elt scale = F.inv(m.at(r, col));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(scale, m.at(r, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Field::elt factor = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(r, j)));
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return r;
}

int rank(const Field& F, Mat m) { return rref(F, m); }

Mat nullspace(const Field& F, const Mat& m) {
  Mat r = m;
  std::vector<int> pivots;
  int rk = rref(F, r, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Mat basis(0, m.cols);
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    FqVec v(m.cols, 0);
    v[free] = 1;
    for (int i = 0; i < rk; ++i) v[pivots[i]] = F.neg(r.at(i, free));
    basis.append_row(v);
  }
  rref(F, basis);  // canonical form
  return basis;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(ambient, ambient);
  for (int i = 0; i < ambient; ++i) {
    s.basis_.at(i, i) = 1;
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span_rows(const Field& F, Mat vectors) {
  Subspace s;
  s.ambient_ = vectors.cols;
  int rk = rref(F, vectors, &s.pivots_);
  vectors.rows = rk;
  vectors.a.resize(static_cast<std::size_t>(rk) * vectors.cols);
  s.basis_ = std::move(vectors);
  return s;
}

FqVec Subspace::reduce(const Field& F, FqVec v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("subspace: dimension mismatch");
  for (int i = 0; i < basis_.rows; ++i) {
    Field::elt c = v[pivots_[i]];
    if (c == 0) continue;
    for (int j = 0; j < ambient_; ++j) v[j] = F.sub(v[j], F.mul(c, basis_.at(i, j)));
  }
  return v;
}

bool Subspace::contains(const Field& F, const FqVec& v) const {
  return vec_is_zero(reduce(F, v));
}

bool Subspace::contains(const Field& F, const Subspace& other) const {
  for (int i = 0; i < other.basis_.rows; ++i)
    if (!contains(F, other.basis_.row(i))) return false;
  return true;
}

FqVec Subspace::coords_of(const Field& F, const FqVec& v) const {
  FqVec coords(basis_.rows, 0);
  for (int i = 0; i < basis_.rows; ++i) coords[i] = v[pivots_[i]];
  if (!vec_is_zero(vec_sub(F, v, from_coords(F, coords))))
    throw std::invalid_argument("subspace: vector is not a member");
  return coords;
}

FqVec Subspace::from_coords(const Field& F, const FqVec& coords) const {
  if (static_cast<int>(coords.size()) != basis_.rows)
    throw std::invalid_argument("subspace: coordinate length mismatch");
  FqVec v(ambient_, 0);
  for (int i = 0; i < basis_.rows; ++i) {
    if (coords[i] == 0) continue;
    for (int j = 0; j < ambient_; ++j)
      v[j] = F.add(v[j], F.mul(coords[i], basis_.at(i, j)));
  }
  return v;
}

Subspace Subspace::sum(const Field& F, const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace: ambient mismatch");
  Mat stacked = basis_;
  for (int i = 0; i < other.basis_.rows; ++i) stacked.append_row(other.basis_.row(i));
  if (stacked.cols == 0) stacked.cols = ambient_;
  return span_rows(F, stacked);
}

Subspace Subspace::intersect(const Field& F, const Subspace& other) const {
  // U cap W = (U_perp + W_perp)_perp
  return annihilator(F).sum(F, other.annihilator(F)).annihilator(F);
}

Subspace Subspace::annihilator(const Field& F) const {
  Mat m = basis_;
  if (m.rows == 0) return Subspace::full(ambient_);
  Mat ns = nullspace(F, m);
  return span_rows(F, ns);
}

std::vector<std::uint8_t> Subspace::key() const {
  std::vector<std::uint8_t> k;
  k.push_back(static_cast<std::uint8_t>(ambient_));
  k.push_back(static_cast<std::uint8_t>(basis_.rows));
  k.insert(k.end(), basis_.a.begin(), basis_.a.end());
  return k;
}

}  // namespace algroup
