#include "liecartan/subspace.hpp"

#include <string>

#include "liecartan/error.hpp"

namespace liecartan {

Subspace::Subspace(const Matrix& generators) : ambient_dim_(generators.cols()) {
  EchelonForm e = row_reduce(generators);
  basis_ = std::move(e.reduced);
  pivots_ = std::move(e.pivots);
  if (basis_.rows() == 0) basis_ = Matrix(0, ambient_dim_);
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vector>& generators)
    : Subspace(Matrix::from_rows(ambient_dim, generators)) {}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(Matrix(0, ambient_dim)); }

Subspace Subspace::whole(std::size_t ambient_dim) { return Subspace(Matrix::identity(ambient_dim)); }

Vector Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) {
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                  " in ambient dimension " +
                                                  std::to_string(ambient_dim_));
  }
  Vector r(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational lead = r[pivots_[k]];
    if (sgn(lead) == 0) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) r[c] -= lead * basis_(k, c);
  }
  return r;
}

bool Subspace::contains(std::span<const Rational> v) const { return liecartan::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw Error(ErrorCode::DimensionMismatch, "subspace containment");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.row(i))) return false;
  return true;
}

Matrix Subspace::annihilator() const {
  if (basis_.rows() == 0) return Matrix::identity(ambient_dim_);
  return nullspace(basis_);
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw Error(ErrorCode::InternalInconsistency, "vector outside subspace");
  Vector c(dim());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<bool> pivot(ambient_dim_, false);
  for (auto p : pivots_) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_dim_; ++i)
    if (!pivot[i]) out.push_back(i);
  return out;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace sum");
  Matrix m = a.basis();
  m.append_rows(b.basis());
  if (m.cols() == 0) m = Matrix(0, a.ambient_dim());
  return Subspace(m);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace intersection");
  Matrix constraints = a.annihilator();
  constraints.append_rows(b.annihilator());
  if (constraints.rows() == 0) return Subspace::whole(a.ambient_dim());
  return Subspace(nullspace(constraints));
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "image of subspace");
  Matrix rows(0, m.rows());
  for (std::size_t i = 0; i < s.dim(); ++i) rows.append_row(m * s.row_vector(i));
  return Subspace(rows);
}

}  // namespace liecartan
