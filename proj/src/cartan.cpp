#include "liecartan/cartan.hpp"

#include <functional>
#include <limits>
#include <string>

#include "liecartan/error.hpp"
#include "liecartan/radicals.hpp"

namespace liecartan {

std::string_view to_string(CartanMethod method) {
  switch (method) {
    case CartanMethod::RegularElement: return "regular";
    case CartanMethod::NormalizerChain: return "chain";
    case CartanMethod::Composite: return "composite";
  }
  return "unknown";
}

bool is_cartan_subalgebra(const LieAlgebra& g, const Subspace& h) {
  if (!is_subalgebra(g, h)) throw Error(ErrorCode::NotClosed, "candidate Cartan subalgebra is not bracket-closed");
  return is_nilpotent(g, h) && normalizer(g, h) == h;
}

std::vector<Vector> regular_search_sequence(std::size_t dim, std::size_t budget) {
  std::vector<Vector> out;
  if (budget == 0) return out;
  std::vector<std::size_t> support;
  // Supports of size `grade` in lexicographic order; signs after the first
  // entry enumerate + before -.
  std::function<bool(std::size_t, std::size_t)> supports = [&](std::size_t start, std::size_t grade) {
    if (support.size() == grade) {
      const std::size_t free_signs = grade - 1;
      for (std::size_t mask = 0; mask < (std::size_t{1} << free_signs); ++mask) {
        Vector v(dim);
        v[support[0]] = 1;
        for (std::size_t b = 0; b < free_signs; ++b) {
          const bool negative = (mask >> (free_signs - 1 - b)) & 1U;
          v[support[b + 1]] = negative ? -1 : 1;
        }
        out.push_back(std::move(v));
        if (out.size() == budget) return false;
      }
      return true;
    }
    for (std::size_t i = start; i < dim; ++i) {
      support.push_back(i);
      const bool more = supports(i + 1, grade);
      support.pop_back();
      if (!more) return false;
    }
    return true;
  };
  for (std::size_t grade = 1; grade <= dim; ++grade)
    if (!supports(0, grade)) break;
  return out;
}

CartanResult regular_element_csa(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  CartanResult result{Subspace::zero(n), CartanMethod::RegularElement, {}, 0};
  if (n == 0) {
    result.trace.push_back(result.csa);
    return result;
  }

  const std::vector<Vector> candidates = regular_search_sequence(n, regular_search_budget(n));
  std::vector<std::size_t> nullity(candidates.size());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Subspace null = fitting_null_component(g, candidates[c]);
    nullity[c] = null.dim();
    if (nullity[c] < best) {
      best = nullity[c];
      result.trace.push_back(std::move(null));
    }
  }
  result.steps = candidates.size();

  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (nullity[c] != best) continue;
    Subspace null = fitting_null_component(g, candidates[c]);
    if (is_cartan_subalgebra(g, null)) {
      result.csa = std::move(null);
      if (!(result.trace.back() == result.csa)) result.trace.push_back(result.csa);
      return result;
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no Fitting null component of minimal nullity " + std::to_string(best) +
                                              " among " + std::to_string(candidates.size()) +
                                              " candidates is a Cartan subalgebra");
}

CartanResult normalizer_chain_csa(const LieAlgebra& g, std::optional<Subspace> start) {
  if (!is_solvable(g)) throw Error(ErrorCode::NotSolvable, "normalizer chain requires a solvable algebra");
  const std::size_t n = g.dim();

  Subspace current = start ? *start : regular_element_csa(g).csa;
  if (current.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "chain start");
  if (!is_subalgebra(g, current)) throw Error(ErrorCode::NotClosed, "chain start is not a subalgebra");
  if (!is_nilpotent(g, current)) throw Error(ErrorCode::HypothesisViolated, "chain start is not nilpotent");
  if (!(current + nilradical(g)).is_whole()) {
    throw Error(ErrorCode::HypothesisViolated, "chain start plus the nilradical does not span the algebra");
  }

  CartanResult result{current, CartanMethod::NormalizerChain, {current}, 0};
  while (true) {
    Subspace next = normalizer(g, current);
    ++result.steps;
    if (next == current) break;
    if (!next.contains(current)) throw Error(ErrorCode::InternalInconsistency, "normalizer does not contain its argument");
    if (!is_nilpotent(g, next)) {
      throw Error(ErrorCode::NonNilpotentIterate, "chain member " + std::to_string(result.trace.size()) +
                                                      " of dim " + std::to_string(next.dim()) +
                                                      " is not nilpotent");
    }
    result.trace.push_back(next);
    current = std::move(next);
  }
  result.csa = current;
  if (!is_cartan_subalgebra(g, result.csa)) {
    throw Error(ErrorCode::PostconditionFailure, "stabilized normalizer chain is not a Cartan subalgebra");
  }
  return result;
}

Subspace centralizer_in_radical(const LieAlgebra& g, const Subspace& h_levi, const LeviDecomposition& decomp) {
  if (!decomp.levi.contains(h_levi)) {
    throw Error(ErrorCode::HypothesisViolated, "subalgebra is not contained in the Levi subalgebra");
  }
  return intersect(centralizer(g, h_levi), decomp.radical);
}

CartanResult composite_csa(const LieAlgebra& g, CompositeParts* parts) {
  LeviDecomposition decomp = levi_decomposition(g);

  const InducedAlgebra levi = induced_algebra(g, decomp.levi);
  const Subspace h_levi = levi.to_ambient(regular_element_csa(levi.algebra()).csa);

  const Subspace z = centralizer_in_radical(g, h_levi, decomp);
  const InducedAlgebra z_algebra = induced_algebra(g, z);
  const Subspace h_z = z_algebra.to_ambient(regular_element_csa(z_algebra.algebra()).csa);

  Subspace h = h_levi + h_z;
  if (!is_cartan_subalgebra(g, h)) {
    throw Error(ErrorCode::PostconditionFailure, "H_S + H_Z is not a Cartan subalgebra");
  }
  CartanResult result{h, CartanMethod::Composite, {h_levi, z, h_z, h}, 0};
  if (parts) *parts = CompositeParts{std::move(decomp), h_levi, z, h_z};
  return result;
}

}  // namespace liecartan
