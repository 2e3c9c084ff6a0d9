#include "liecartan/radicals.hpp"

#include "liecartan/enumerate.hpp"
#include "liecartan/error.hpp"

namespace liecartan {

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) v.insert(v.end(), m.row(r).begin(), m.row(r).end());
  return v;
}

// Span of the unital associative algebra generated by the given operators.
std::vector<Matrix> associative_span(const std::vector<Matrix>& generators, std::size_t n) {
  Subspace span = Subspace(n * n, {flatten(Matrix::identity(n))});
  std::vector<Matrix> basis{Matrix::identity(n)};
  std::size_t frontier = 0;
  auto try_add = [&](const Matrix& m) {
    Vector v = flatten(m);
    if (span.contains(v)) return;
    span = span + Subspace(n * n, {v});
    basis.push_back(m);
  };
  for (const auto& gen : generators) try_add(gen);
  while (frontier < basis.size()) {
    const Matrix current = basis[frontier++];
    for (const auto& gen : generators) try_add(gen * current);
  }
  return basis;
}

bool is_nilpotent_ideal(const LieAlgebra& g, const Subspace& s) {
  return is_ideal(g, s) && is_nilpotent(g, s);
}

}  // namespace

Subspace radical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Subspace whole = Subspace::whole(n);
  const Subspace derived = bracket_span(g, whole, whole);
  // x is in the radical iff kappa(x, d) = 0 for every d in [g, g].
  const Matrix constraints = derived.basis() * killing_form(g);
  Subspace rad(nullspace(constraints));
  if (!is_ideal(g, rad) || !is_solvable(g, rad)) {
    throw Error(ErrorCode::InternalInconsistency,
                "Killing-orthogonal complement of [g,g] is not a solvable ideal (dim " +
                    std::to_string(rad.dim()) + ")");
  }
  return rad;
}

Subspace nilradical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Subspace rad = radical(g);
  if (rad.is_zero()) return rad;

  // ad(rad) is triangularizable over the algebraic closure, so x in rad acts
  // nilpotently iff tr(ad(x) a) = 0 for every a in the unital associative
  // algebra generated by ad(rad).
  std::vector<Matrix> generators;
  for (std::size_t i = 0; i < rad.dim(); ++i) generators.push_back(g.ad(rad.row(i)));
  const std::vector<Matrix> assoc = associative_span(generators, n);

  Matrix constraints(assoc.size(), rad.dim());
  for (std::size_t a = 0; a < assoc.size(); ++a)
    for (std::size_t j = 0; j < rad.dim(); ++j) constraints(a, j) = trace_of_product(generators[j], assoc[a]);
  const Matrix coefficients = nullspace(constraints);
  Matrix rows(0, n);
  for (std::size_t r = 0; r < coefficients.rows(); ++r) rows.append_row(coefficients.row_vector(r) * rad.basis());
  Subspace nil(rows);

  bool ok = is_nilpotent_ideal(g, nil) && nil.contains(bracket_span(g, Subspace::whole(n), rad));
  for (std::size_t i = 0; ok && i < nil.dim(); ++i) ok = is_ad_nilpotent(g, nil.row(i));
  if (ok) return nil;

  if (n <= kEnumerationLimit) return nilradical_by_enumeration(g);
  throw Error(ErrorCode::InternalInconsistency,
              "trace-form nilradical candidate failed verification (dim " + std::to_string(nil.dim()) + ")");
}

RadicalPair radicals(const LieAlgebra& g) { return {radical(g), nilradical(g)}; }

bool is_semisimple(const LieAlgebra& g) { return rank(killing_form(g)) == g.dim(); }

Subspace nilradical_by_enumeration(const LieAlgebra& g) {
  Subspace best = Subspace::zero(g.dim());
  for (const Subspace& ideal : enumerate_ideals(g)) {
    if (is_nilpotent(g, ideal) && !best.contains(ideal)) best = best + ideal;
  }
  if (!is_nilpotent_ideal(g, best)) {
    throw Error(ErrorCode::InternalInconsistency, "sum of enumerated nilpotent ideals is not nilpotent");
  }
  return best;
}

}  // namespace liecartan
