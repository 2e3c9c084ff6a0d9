#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "liecartan/levi.hpp"
#include "liecartan/lie_algebra.hpp"

namespace liecartan {

enum class CartanMethod { RegularElement, NormalizerChain, Composite };

std::string_view to_string(CartanMethod method);

struct CartanResult {
  Subspace csa;
  CartanMethod method;
  /// Regular-element search: Fitting null components that improved the
  /// running minimum. Normalizer chain: L, N(L), N(N(L)), ...
  /// Composite: H_S, Z_R(H_S), H_Z, H. Always ends with csa.
  std::vector<Subspace> trace;
  /// Normalizer evaluations (chain) or candidates examined (regular search).
  std::size_t steps = 0;
};

/// Nilpotent and self-normalizing. Throws NotClosed if h is not a subalgebra.
bool is_cartan_subalgebra(const LieAlgebra& g, const Subspace& h);

/// Regular-element candidates in search order: basis vectors, then {-1,0,1}
/// combinations by support size, supports in lexicographic order, first
/// nonzero coefficient +1. At most `budget` vectors.
std::vector<Vector> regular_search_sequence(std::size_t dim, std::size_t budget);

inline std::size_t regular_search_budget(std::size_t dim) { return 10 * dim * dim; }

/// Fitting null component of an element of minimal generalized nullity over
/// the search sequence. Throws SearchExhausted.
CartanResult regular_element_csa(const LieAlgebra& g);

/// Iterated normalizers of a nilpotent L with L + nilradical = g in a
/// solvable g. With no L, starts from the Fitting null component of the
/// first regular element found.
/// Throws NotSolvable, HypothesisViolated, NonNilpotentIterate.
CartanResult normalizer_chain_csa(const LieAlgebra& g, std::optional<Subspace> start = std::nullopt);

/// Centralizer of H_S intersected with the radical of the decomposition.
/// Throws HypothesisViolated when H_S is not inside the Levi subalgebra.
Subspace centralizer_in_radical(const LieAlgebra& g, const Subspace& h_levi, const LeviDecomposition& decomp);

struct CompositeParts {
  LeviDecomposition decomposition;
  Subspace levi_csa;             // H_S
  Subspace radical_centralizer;  // Z_R(H_S)
  Subspace centralizer_csa;      // H_Z, a CSA of Z_R(H_S)
};

/// H = H_S (+) H_Z with H_S a CSA of a Levi subalgebra and H_Z a CSA of
/// Z_R(H_S). `parts`, when given, receives the intermediate pieces.
CartanResult composite_csa(const LieAlgebra& g, CompositeParts* parts = nullptr);

}  // namespace liecartan
