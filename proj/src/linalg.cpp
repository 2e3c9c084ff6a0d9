#include "liecartan/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "liecartan/error.hpp"

namespace liecartan {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has length " +
                                                    std::to_string(rows[r].size()) + ", expected " +
                                                    std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto span = row(r);
  return Vector(span.begin(), span.end());
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void Matrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "appended row has length " +
                                                  std::to_string(values.size()) + ", expected " +
                                                  std::to_string(cols_));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  for (std::size_t r = 0; r < other.rows(); ++r) append_row(other.row(r));
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " by " +
                                                  std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(x[k]) != 0 && sgn(a(i, k)) != 0) y[i] += a(i, k) * x[k];
  return y;
}

Vector operator*(const Vector& x, const Matrix& a) {
  if (a.rows() != x.size()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix product");
  Vector y(a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (sgn(x[k]) == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(k, j)) != 0) y[j] += x[k] * a(k, j);
  }
  return y;
}

Rational trace(const Matrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

Rational trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "trace of product");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(b(k, i)) != 0) t += a(i, k) * b(k, i);
  return t;
}

Matrix power(const Matrix& a, std::size_t exponent) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

EchelonForm row_reduce(const Matrix& a) {
  Matrix m = a;
  Matrix t = Matrix::identity(a.rows());
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && sgn(m(pivot_row, col)) == 0) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    if (pivot_row != lead) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot_row, c), m(lead, c));
      for (std::size_t c = 0; c < t.cols(); ++c) std::swap(t(pivot_row, c), t(lead, c));
    }
    const Rational inv = 1 / m(lead, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(lead, c) *= inv;
    for (std::size_t c = 0; c < t.cols(); ++c) t(lead, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead, c);
      for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) -= factor * t(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }

  EchelonForm out;
  out.pivots = std::move(pivots);
  out.reduced = Matrix(out.pivots.size(), a.cols());
  out.transform = Matrix(out.pivots.size(), a.rows());
  for (std::size_t r = 0; r < out.pivots.size(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), out.reduced.row(r).begin());
    std::copy(t.row(r).begin(), t.row(r).end(), out.transform.row(r).begin());
  }
  return out;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square");
  Matrix m = a;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(m(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

Matrix nullspace(const Matrix& a) {
  const EchelonForm e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  Matrix basis(0, a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.append_row(v);
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length");
  Matrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), augmented.row(r).begin());
    augmented(r, a.cols()) = b[r];
  }
  const EchelonForm e = row_reduce(augmented);
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

CoordinateMap::CoordinateMap(const Matrix& basis) : size_(basis.rows()), echelon_(row_reduce(basis)) {
  if (echelon_.pivots.size() != size_) {
    throw Error(ErrorCode::InternalInconsistency, "coordinate basis is linearly dependent");
  }
}

std::optional<Vector> CoordinateMap::coordinates(std::span<const Rational> v) const {
  if (v.size() != echelon_.reduced.cols()) throw Error(ErrorCode::DimensionMismatch, "coordinates");
  Vector residual(v.begin(), v.end());
  Vector coeff(size_);
  for (std::size_t k = 0; k < echelon_.pivots.size(); ++k) {
    const Rational lead = residual[echelon_.pivots[k]];
    if (sgn(lead) == 0) continue;
    for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= lead * echelon_.reduced(k, c);
    for (std::size_t j = 0; j < size_; ++j) coeff[j] += lead * echelon_.transform(k, j);
  }
  if (!liecartan::is_zero(residual)) return std::nullopt;
  return coeff;
}

}  // namespace liecartan
