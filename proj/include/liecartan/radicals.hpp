#pragma once

#include "liecartan/lie_algebra.hpp"

namespace liecartan {

struct RadicalPair {
  Subspace radical;     // largest solvable ideal
  Subspace nilradical;  // largest nilpotent ideal
};

/// Largest solvable ideal, computed as the Killing-orthogonal complement of
/// [g, g]. Throws InternalInconsistency if the result is not a solvable ideal.
Subspace radical(const LieAlgebra& g);

/// Largest nilpotent ideal: the elements x of the radical with ad(x)
/// nilpotent. Throws InternalInconsistency if verification fails and the
/// enumeration fallback does not apply.
Subspace nilradical(const LieAlgebra& g);

RadicalPair radicals(const LieAlgebra& g);

/// Killing form nondegenerate.
bool is_semisimple(const LieAlgebra& g);

/// Largest nilpotent ideal among the ideals generated by small coordinate
/// vector combinations. Only meaningful for dim <= kEnumerationLimit.
Subspace nilradical_by_enumeration(const LieAlgebra& g);

inline constexpr std::size_t kEnumerationLimit = 6;

}  // namespace liecartan
