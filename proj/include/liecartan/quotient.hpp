#pragma once

#include "liecartan/lie_algebra.hpp"

namespace liecartan {

/// g -> g / I. The target basis is the image of the standard basis vectors
/// at the non-pivot coordinates of I; `section` maps each target basis
/// vector back to that standard vector.
struct QuotientMap {
  LieAlgebra source;
  Subspace ideal;
  LieAlgebra target;
  Matrix projection;  // dim(target) x dim(source)
  Matrix section;     // dim(source) x dim(target)

  Vector project(std::span<const Rational> v) const { return projection * Vector(v.begin(), v.end()); }
  Subspace project(const Subspace& s) const;
  /// Full preimage: section(s) + ideal.
  Subspace preimage(const Subspace& s) const;
};

/// Throws NotIdeal.
QuotientMap quotient_algebra(const LieAlgebra& g, const Subspace& ideal);

/// pi(H) for a Cartan subalgebra H of the source. Throws NotCartan, or
/// PostconditionFailure if the image is not a Cartan subalgebra.
Subspace push_cartan(const Subspace& h, const QuotientMap& q);

/// A Cartan subalgebra of the source mapping onto the Cartan subalgebra
/// `h_target` of the target: a CSA of the preimage of `h_target`.
/// Throws NotCartan or PostconditionFailure.
Subspace lift_cartan(const Subspace& h_target, const QuotientMap& q);

}  // namespace liecartan
