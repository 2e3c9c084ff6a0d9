#include "liecartan/quotient.hpp"

#include <string>

#include "liecartan/cartan.hpp"
#include "liecartan/error.hpp"
#include "liecartan/levi.hpp"

namespace liecartan {

Subspace QuotientMap::project(const Subspace& s) const { return image(projection, s); }

Subspace QuotientMap::preimage(const Subspace& s) const { return image(section, s) + ideal; }

QuotientMap quotient_algebra(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "quotient_algebra");
  if (!is_ideal(g, ideal)) {
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t r = 0; r < ideal.dim(); ++r) {
        const Vector b = g.bracket(unit_vector(g.dim(), i), ideal.row_vector(r));
        if (!ideal.contains(b)) {
          throw Error(ErrorCode::NotIdeal, "[" + g.labels()[i] + ", " + describe_vector(g.labels(), ideal.row(r)) +
                                               "] = " + describe_vector(g.labels(), b) + " leaves the subspace");
        }
      }
  }

  const std::size_t n = g.dim();
  const std::vector<std::size_t> comp = ideal.complement_indices();
  const std::size_t m = comp.size();

  Matrix projection(m, n);
  Matrix section(n, m);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector r = ideal.reduce(unit_vector(n, c));
    for (std::size_t k = 0; k < m; ++k) projection(k, c) = r[comp[k]];
  }
  for (std::size_t k = 0; k < m; ++k) section(comp[k], k) = 1;

  StructureConstants constants;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.labels()[comp[i]]);
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector b = projection * g.bracket_basis(comp[i], comp[j]);
      SparseVector entry;
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(b[k]) != 0) entry.emplace(k, b[k]);
      if (!entry.empty()) constants.emplace(std::pair{i, j}, std::move(entry));
    }
  }
  LieAlgebra target(std::move(labels), constants, JacobiCheck::Skip,
                    g.name().empty() ? std::string{} : g.name() + "/I");
  return QuotientMap{g, ideal, std::move(target), std::move(projection), std::move(section)};
}

Subspace push_cartan(const Subspace& h, const QuotientMap& q) {
  if (!is_cartan_subalgebra(q.source, h)) throw Error(ErrorCode::NotCartan, "push_cartan input is not a Cartan subalgebra");
  Subspace pushed = q.project(h);
  if (!is_cartan_subalgebra(q.target, pushed)) {
    throw Error(ErrorCode::PostconditionFailure, "image of a Cartan subalgebra is not Cartan in the quotient");
  }
  return pushed;
}

Subspace lift_cartan(const Subspace& h_target, const QuotientMap& q) {
  if (!is_cartan_subalgebra(q.target, h_target)) {
    throw Error(ErrorCode::NotCartan, "lift_cartan input is not a Cartan subalgebra of the quotient");
  }
  const Subspace preimage = q.preimage(h_target);
  const InducedAlgebra m = induced_algebra(q.source, preimage);
  Subspace lifted = m.to_ambient(regular_element_csa(m.algebra()).csa);
  if (!(q.project(lifted) == h_target)) {
    throw Error(ErrorCode::PostconditionFailure, "lifted Cartan subalgebra does not map onto the target");
  }
  if (!is_cartan_subalgebra(q.source, lifted)) {
    throw Error(ErrorCode::PostconditionFailure, "lifted subalgebra is not Cartan in the source");
  }
  return lifted;
}

}  // namespace liecartan
