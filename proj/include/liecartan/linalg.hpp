#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "liecartan/rational.hpp"

namespace liecartan {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;
  std::vector<Vector> row_list() const;

  void append_row(std::span<const Rational> values);
  void append_rows(const Matrix& other);

  Matrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
/// Row vector times matrix.
Vector operator*(const Vector& x, const Matrix& a);

Rational trace(const Matrix& a);
Rational trace_of_product(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, std::size_t exponent);

struct EchelonForm {
  Matrix reduced;                   // nonzero rows only, reduced row-echelon
  std::vector<std::size_t> pivots;  // pivot column of each row
  Matrix transform;                 // reduced = transform * input
};

/// Gauss-Jordan elimination. Zero rows are dropped from the result.
EchelonForm row_reduce(const Matrix& a);

std::size_t rank(const Matrix& a);
Rational determinant(const Matrix& a);

/// Rows form a basis of {x : a x = 0}; one row per free column, taken in
/// increasing column order with that free variable set to 1.
Matrix nullspace(const Matrix& a);

/// Particular solution of a x = b with every free variable set to 0, or
/// nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Expresses vectors in a fixed (linearly independent) row basis.
class CoordinateMap {
 public:
  explicit CoordinateMap(const Matrix& basis);

  std::size_t size() const noexcept { return size_; }
  /// Coordinates of v, or nullopt when v is outside the span.
  std::optional<Vector> coordinates(std::span<const Rational> v) const;

 private:
  std::size_t size_ = 0;
  EchelonForm echelon_;
};

}  // namespace liecartan
