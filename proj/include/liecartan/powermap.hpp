#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liecartan {

/// Abelian model of a Cartan subgroup: R^a x T^b x (Z/m_1 x ... x Z/m_r).
struct CartanGroupModel {
  std::uint64_t vector_rank = 0;
  std::uint64_t torus_rank = 0;
  std::vector<std::uint64_t> component_orders;

  friend bool operator==(const CartanGroupModel&, const CartanGroupModel&) = default;
};

/// One model per conjugacy class of Cartan subgroups of a group.
struct GroupDensityInstance {
  std::string name;
  std::vector<CartanGroupModel> cartan_models;
};

/// x -> x^k is onto the model. Throws InvalidOrder on a component order < 2.
bool pk_surjective(const CartanGroupModel& model, std::uint64_t k);

/// First component order m with gcd(k, m) != 1, if any.
std::optional<std::uint64_t> first_obstruction(const CartanGroupModel& model, std::uint64_t k);

/// P_k(G) is dense iff P_k(C) = C for every Cartan subgroup C.
/// Throws EmptyInstance.
bool density_from_cartans(const GroupDensityInstance& instance, std::uint64_t k);

/// (h_dense and quotient_dense) implies g_result.
constexpr bool composition_holds(bool h_dense, bool quotient_dense, bool g_result) {
  return !(h_dense && quotient_dense) || g_result;
}

/// Dense power maps for every k >= 1, decided exactly (every component group
/// trivial). `k_max` bounds a redundant enumeration cross-check that throws
/// InternalInconsistency on disagreement.
bool weakly_exponential_model(const GroupDensityInstance& instance, std::uint64_t k_max);

}  // namespace liecartan
