#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liecartan/linalg.hpp"

namespace liecartan {

/// A linear subspace of Q^n held in reduced row-echelon form. Construction
/// canonicalizes, so two subspaces are equal exactly when their matrices are.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of `generators` (any rank, any order).
  explicit Subspace(const Matrix& generators);
  Subspace(std::size_t ambient_dim, const std::vector<Vector>& generators);

  static Subspace zero(std::size_t ambient_dim);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_dim_; }

  const Matrix& basis() const noexcept { return basis_; }
  std::span<const Rational> row(std::size_t i) const { return basis_.row(i); }
  Vector row_vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Rows w spanning {w : <w, u> = 0 for all u in this subspace}.
  Matrix annihilator() const;
  /// Coordinates of v in the canonical basis rows; v must lie in the span.
  Vector coordinates(std::span<const Rational> v) const;
  /// v minus its component along the canonical basis; zero iff v is contained.
  Vector reduce(std::span<const Rational> v) const;
  /// Standard basis indices that are not pivots: they span a complement.
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Image of each basis row under the linear map v -> m v.
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace liecartan
