#include "liecartan/powermap.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "liecartan/error.hpp"

namespace liecartan {

namespace {

void check_orders(const CartanGroupModel& model) {
  for (auto m : model.component_orders) {
    if (m < 2) throw Error(ErrorCode::InvalidOrder, "component order " + std::to_string(m) + " is below 2");
  }
}

}  // namespace

std::optional<std::uint64_t> first_obstruction(const CartanGroupModel& model, std::uint64_t k) {
  check_orders(model);
  // R^a and T^b are divisible; on Z/m multiplication by k is onto iff gcd(k, m) = 1.
  for (auto m : model.component_orders)
    if (std::gcd(k, m) != 1) return m;
  return std::nullopt;
}

bool pk_surjective(const CartanGroupModel& model, std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::HypothesisViolated, "power map exponent must be positive");
  return !first_obstruction(model, k).has_value();
}

bool density_from_cartans(const GroupDensityInstance& instance, std::uint64_t k) {
  if (instance.cartan_models.empty()) {
    throw Error(ErrorCode::EmptyInstance, "instance \"" + instance.name + "\" lists no Cartan classes");
  }
  return std::all_of(instance.cartan_models.begin(), instance.cartan_models.end(),
                     [k](const CartanGroupModel& m) { return pk_surjective(m, k); });
}

bool weakly_exponential_model(const GroupDensityInstance& instance, std::uint64_t k_max) {
  if (instance.cartan_models.empty()) {
    throw Error(ErrorCode::EmptyInstance, "instance \"" + instance.name + "\" lists no Cartan classes");
  }
  for (const auto& m : instance.cartan_models) check_orders(m);
  const bool exact = std::all_of(instance.cartan_models.begin(), instance.cartan_models.end(),
                                 [](const CartanGroupModel& m) { return m.component_orders.empty(); });

  bool enumerated = true;
  for (std::uint64_t k = 1; k <= k_max && enumerated; ++k) enumerated = density_from_cartans(instance, k);
  // A nontrivial component order m fails at k = m, so enumeration agrees
  // with the exact verdict once k_max reaches the smallest order.
  std::uint64_t smallest = 0;
  for (const auto& m : instance.cartan_models)
    for (auto order : m.component_orders) smallest = smallest == 0 ? order : std::min(smallest, order);
  if ((exact && !enumerated) || (!exact && smallest <= k_max && enumerated)) {
    throw Error(ErrorCode::InternalInconsistency, "weak exponentiality enumeration disagrees with the exact test");
  }
  return exact;
}

}  // namespace liecartan
