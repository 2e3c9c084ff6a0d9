#pragma once

#include "liecartan/lie_algebra.hpp"

namespace liecartan {

/// A subalgebra re-expressed as a Lie algebra in its own basis, together
/// with the inclusion back into the ambient algebra.
class InducedAlgebra {
 public:
  InducedAlgebra(LieAlgebra algebra, Matrix inclusion);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  /// Row i holds the ambient coordinates of induced basis vector i.
  const Matrix& inclusion() const noexcept { return inclusion_; }

  Vector to_ambient(std::span<const Rational> v) const;
  Subspace to_ambient(const Subspace& s) const;
  /// Requires s to lie inside the image of the inclusion.
  Subspace from_ambient(const Subspace& s) const;

 private:
  LieAlgebra algebra_;
  Matrix inclusion_;
  CoordinateMap coordinates_;
};

/// The subalgebra in its canonical (echelon) basis. Throws NotClosed.
InducedAlgebra induced_algebra(const LieAlgebra& g, const Subspace& a);

/// The algebra spanned by the given independent rows, in exactly that
/// basis. Throws NotClosed when the span is not a subalgebra.
InducedAlgebra algebra_on_basis(const LieAlgebra& g, const Matrix& basis_rows, std::string name = {});

struct LeviDecomposition {
  Subspace levi;     // semisimple subalgebra
  Subspace radical;  // largest solvable ideal
};

/// g = levi (+) radical. Deterministic: complement basis vectors follow
/// fixture order and every correction solve sets free variables to zero.
/// Throws LiftFailure if a correction system is inconsistent.
LeviDecomposition levi_decomposition(const LieAlgebra& g);

}  // namespace liecartan
