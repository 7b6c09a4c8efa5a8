#pragma once

#include <cstdint>
#include <vector>

#include "algroup/gf.hpp"

namespace algroup {

using FqVec = std::vector<Field::elt>;

// Coordinate vectors are ordered lexicographically with coordinate 0 most
// significant; packing preserves that order as integer order.
std::uint64_t pack_coords(const FqVec& v, int q);
FqVec unpack_coords(std::uint64_t idx, int q, int n);

// Dense row-major matrix over F_q.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Field::elt> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Field::elt& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Field::elt at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  FqVec row(int i) const;
  void append_row(const FqVec& v);

  bool operator==(const Mat&) const = default;
};

Mat transpose(const Mat& m);
// y = M x
FqVec mat_vec(const Field& F, const Mat& m, const FqVec& x);
Field::elt dot(const Field& F, const FqVec& a, const FqVec& b);
FqVec vec_add(const Field& F, const FqVec& a, const FqVec& b);
FqVec vec_sub(const Field& F, const FqVec& a, const FqVec& b);
FqVec vec_scale(const Field& F, Field::elt s, const FqVec& a);
bool vec_is_zero(const FqVec& a);

// In-place reduced row echelon form; returns the rank and fills pivot column
// indices when requested. Zero rows end up at the bottom.
int rref(const Field& F, Mat& m, std::vector<int>* pivots = nullptr);
int rank(const Field& F, Mat m);
// Rows form the canonical (RREF) basis of { x : m x = 0 }.
Mat nullspace(const Field& F, const Mat& m);

// Subspace of F_q^n held as a reduced-row-echelon basis matrix, so equal
// subspaces have equal representations.
class Subspace {
 public:
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span_rows(const Field& F, Mat vectors);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // residual of v after eliminating along the basis rows
  FqVec reduce(const Field& F, FqVec v) const;
  bool contains(const Field& F, const FqVec& v) const;
  bool contains(const Field& F, const Subspace& other) const;

  // coordinates of a member vector in the row basis (throws if not a member)
  FqVec coords_of(const Field& F, const FqVec& v) const;
  // linear combination of the basis rows
  FqVec from_coords(const Field& F, const FqVec& coords) const;

  Subspace sum(const Field& F, const Subspace& other) const;
  Subspace intersect(const Field& F, const Subspace& other) const;
  // { f in the dual coordinate space : f(u) = 0 for all u here }
  Subspace annihilator(const Field& F) const;

  bool operator==(const Subspace&) const = default;
  // canonical bytes, usable as a map key
  std::vector<std::uint8_t> key() const;

 private:
  int ambient_ = 0;
  Mat basis_;
  std::vector<int> pivots_;
};

}  // namespace algroup
