#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liecartan/lie_algebra.hpp"
#include "liecartan/powermap.hpp"

// Brute-force routes used to cross-check the main algorithms. None of these
// call into the radical, Levi, Cartan or power-map implementations.
namespace liecartan::oracle {

inline constexpr std::uint64_t kMaxEnumeratedGroupOrder = 10000;

/// Enumerates k*x over the finite group (+)_i Z/m_i and compares the image
/// size with the group order. Requires the order to be <= the limit above.
bool power_map_onto(const CartanGroupModel& model, std::uint64_t k);

std::uint64_t component_group_order(const CartanGroupModel& model);

/// The element containing every other element of the list, if the list has
/// exactly one maximal element under inclusion.
std::optional<Subspace> unique_maximal(const std::vector<Subspace>& spaces);

/// Largest solvable (resp. nilpotent) ideal among the enumerated ideals.
std::optional<Subspace> largest_enumerated_solvable_ideal(const LieAlgebra& g);
std::optional<Subspace> largest_enumerated_nilpotent_ideal(const LieAlgebra& g);

/// Intersection over h in H of ker ad(h)^dim. A nilpotent H is a Cartan
/// subalgebra iff this equals H.
Subspace fitting_null_of_subalgebra(const LieAlgebra& g, const Subspace& h);

}  // namespace liecartan::oracle
