#include "liecartan/oracles.hpp"

#include "liecartan/enumerate.hpp"
#include "liecartan/error.hpp"

namespace liecartan::oracle {

std::uint64_t component_group_order(const CartanGroupModel& model) {
  std::uint64_t order = 1;
  for (auto m : model.component_orders) {
    if (m == 0) throw Error(ErrorCode::InvalidOrder, "zero component order");
    if (order > kMaxEnumeratedGroupOrder) return order;
    order *= m;
  }
  return order;
}

bool power_map_onto(const CartanGroupModel& model, std::uint64_t k) {
  const std::uint64_t order = component_group_order(model);
  if (order > kMaxEnumeratedGroupOrder) {
    throw Error(ErrorCode::HypothesisViolated, "component group too large to enumerate");
  }
  const auto& orders = model.component_orders;
  std::vector<bool> hit(order, false);
  std::vector<std::uint64_t> digits(orders.size(), 0);
  for (std::uint64_t element = 0; element < order; ++element) {
    // Mixed-radix decode, multiply by k componentwise, re-encode.
    std::uint64_t rest = element;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      digits[i] = rest % orders[i];
      rest /= orders[i];
    }
    std::uint64_t image = 0;
    for (std::size_t i = orders.size(); i-- > 0;) image = image * orders[i] + (digits[i] * (k % orders[i])) % orders[i];
    hit[image] = true;
  }
  for (bool h : hit)
    if (!h) return false;
  return true;
}

std::optional<Subspace> unique_maximal(const std::vector<Subspace>& spaces) {
  std::vector<const Subspace*> maximal;
  for (const auto& s : spaces) {
    bool dominated = false;
    for (const auto& t : spaces) {
      if (t.dim() > s.dim() && t.contains(s)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    bool duplicate = false;
    for (const auto* m : maximal) duplicate = duplicate || *m == s;
    if (!duplicate) maximal.push_back(&s);
  }
  if (maximal.size() != 1) return std::nullopt;
  return *maximal.front();
}

std::optional<Subspace> largest_enumerated_solvable_ideal(const LieAlgebra& g) {
  std::vector<Subspace> solvable;
  for (auto& ideal : enumerate_ideals(g))
    if (is_solvable(g, ideal)) solvable.push_back(std::move(ideal));
  return unique_maximal(solvable);
}

std::optional<Subspace> largest_enumerated_nilpotent_ideal(const LieAlgebra& g) {
  std::vector<Subspace> nilpotent;
  for (auto& ideal : enumerate_ideals(g))
    if (is_nilpotent(g, ideal)) nilpotent.push_back(std::move(ideal));
  return unique_maximal(nilpotent);
}

Subspace fitting_null_of_subalgebra(const LieAlgebra& g, const Subspace& h) {
  Subspace out = Subspace::whole(g.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) out = intersect(out, fitting_null_component(g, h.row(i)));
  return out;
}

}  // namespace liecartan::oracle
