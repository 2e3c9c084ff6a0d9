#pragma once

#include <cstddef>
#include <vector>

#include "liecartan/lie_algebra.hpp"

namespace liecartan {

/// e_i, then e_i + e_j and e_i - e_j for i < j.
std::vector<Vector> small_vector_pool(std::size_t dim);

/// Distinct ideals generated by at most two pool vectors, closed under sums.
/// Order is deterministic (discovery order).
std::vector<Subspace> enumerate_ideals(const LieAlgebra& g);

/// Distinct subalgebras generated by at most `max_generators` pool vectors,
/// including the zero subalgebra.
std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& g, std::size_t max_generators = 2);

}  // namespace liecartan
