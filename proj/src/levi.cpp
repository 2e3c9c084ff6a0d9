#include "liecartan/levi.hpp"

#include <string>

#include "liecartan/error.hpp"
#include "liecartan/radicals.hpp"

namespace liecartan {

InducedAlgebra::InducedAlgebra(LieAlgebra algebra, Matrix inclusion)
    : algebra_(std::move(algebra)), inclusion_(std::move(inclusion)), coordinates_(inclusion_) {}

Vector InducedAlgebra::to_ambient(std::span<const Rational> v) const {
  if (v.size() != inclusion_.rows()) throw Error(ErrorCode::DimensionMismatch, "to_ambient");
  return Vector(v.begin(), v.end()) * inclusion_;
}

Subspace InducedAlgebra::to_ambient(const Subspace& s) const {
  if (s.ambient_dim() != inclusion_.rows()) throw Error(ErrorCode::DimensionMismatch, "to_ambient");
  return Subspace(s.basis() * inclusion_);
}

Subspace InducedAlgebra::from_ambient(const Subspace& s) const {
  if (s.ambient_dim() != inclusion_.cols()) throw Error(ErrorCode::DimensionMismatch, "from_ambient");
  Matrix rows(0, inclusion_.rows());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto c = coordinates_.coordinates(s.row(i));
    if (!c) throw Error(ErrorCode::HypothesisViolated, "subspace is not inside the induced algebra");
    rows.append_row(*c);
  }
  return Subspace(rows);
}

InducedAlgebra algebra_on_basis(const LieAlgebra& g, const Matrix& basis_rows, std::string name) {
  if (basis_rows.cols() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "algebra_on_basis");
  const CoordinateMap coords(basis_rows);
  const std::size_t m = basis_rows.rows();

  StructureConstants constants;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector b = g.bracket(basis_rows.row(i), basis_rows.row(j));
      auto c = coords.coordinates(b);
      if (!c) {
        throw Error(ErrorCode::NotClosed, "bracket of basis rows " + std::to_string(i) + " and " +
                                              std::to_string(j) + " leaves the span");
      }
      SparseVector entry;
      for (std::size_t k = 0; k < m; ++k)
        if (sgn((*c)[k]) != 0) entry.emplace(k, (*c)[k]);
      if (!entry.empty()) constants.emplace(std::pair{i, j}, std::move(entry));
    }
  }

  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) labels.push_back(describe_vector(g.labels(), basis_rows.row(i)));
  // Jacobi is inherited from the ambient algebra.
  LieAlgebra algebra(std::move(labels), constants, JacobiCheck::Skip, std::move(name));
  return InducedAlgebra(std::move(algebra), basis_rows);
}

InducedAlgebra induced_algebra(const LieAlgebra& g, const Subspace& a) {
  if (a.ambient_dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "induced_algebra");
  return algebra_on_basis(g, a.basis());
}

namespace {

// Rows of `outer` (canonical order) that extend `inner` to a basis of `outer`.
Matrix complement_rows(const Subspace& outer, const Subspace& inner) {
  Matrix rows(0, outer.ambient_dim());
  Subspace span = inner;
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    if (span.contains(outer.row(i))) continue;
    rows.append_row(outer.row(i));
    span = span + Subspace(outer.ambient_dim(), {outer.row_vector(i)});
  }
  return rows;
}

}  // namespace

LeviDecomposition levi_decomposition(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Subspace rad = radical(g);
  if (rad.is_zero()) return {Subspace::whole(n), rad};
  if (rad.is_whole()) return {Subspace::zero(n), rad};

  // Complement of the radical spanned by non-pivot coordinate vectors; these
  // give the structure constants of g / rad.
  const std::vector<std::size_t> comp = rad.complement_indices();
  const std::size_t s = comp.size();
  std::vector<Vector> x;
  for (auto idx : comp) x.push_back(unit_vector(n, idx));

  // quotient[i][j] = coordinates of [y_i, y_j] modulo rad.
  std::vector<std::vector<Vector>> quotient(s, std::vector<Vector>(s, Vector(s)));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const Vector r = rad.reduce(g.bracket(x[i], x[j]));
      for (std::size_t k = 0; k < s; ++k) quotient[i][j][k] = r[comp[k]];
    }
  }

  auto defect = [&](std::size_t i, std::size_t j) {
    Vector e = g.bracket(x[i], x[j]);
    for (std::size_t k = 0; k < s; ++k)
      if (sgn(quotient[i][j][k]) != 0)
        for (std::size_t c = 0; c < n; ++c) e[c] -= quotient[i][j][k] * x[k][c];
    return e;
  };

  // Lift through rad = R_0 > R_1 = [R_0,R_0] > ... > 0. At stage t every
  // defect lies in R_t; corrections z_i in R_t push it into R_{t+1}.
  const std::vector<Subspace> series = derived_series(g, rad);
  for (std::size_t t = 0; t + 1 < series.size(); ++t) {
    const Subspace& upper = series[t];
    const Subspace& lower = series[t + 1];
    const Matrix w = complement_rows(upper, lower);
    const std::size_t p = w.rows();
    Matrix basis = w;
    basis.append_rows(lower.basis());
    const CoordinateMap coords(basis);
    auto project = [&](const Vector& v) {
      auto c = coords.coordinates(v);
      if (!c) throw Error(ErrorCode::LiftFailure, "defect left R_" + std::to_string(t));
      return Vector(c->begin(), c->begin() + static_cast<std::ptrdiff_t>(p));
    };

    const std::size_t pairs = s * (s - 1) / 2;
    Matrix system(pairs * p, s * p);
    Vector rhs(pairs * p);
    std::size_t eq = 0;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j, eq += p) {
        const Vector e = project(defect(i, j));
        for (std::size_t r = 0; r < p; ++r) rhs[eq + r] = -e[r];
        for (std::size_t a = 0; a < p; ++a) {
          const Vector wa = w.row_vector(a);
          const Vector from_j = project(g.bracket(x[i], wa));  // [x_i, z_j]
          const Vector from_i = project(g.bracket(wa, x[j]));  // [z_i, x_j]
          for (std::size_t r = 0; r < p; ++r) {
            system(eq + r, j * p + a) += from_j[r];
            system(eq + r, i * p + a) += from_i[r];
          }
          // - sum_k c^k_ij z_k; w_a has coordinate 1 at position a.
          for (std::size_t k = 0; k < s; ++k) system(eq + a, k * p + a) -= quotient[i][j][k];
        }
      }
    }
    auto solution = solve(system, rhs);
    if (!solution) throw Error(ErrorCode::LiftFailure, "Levi correction system inconsistent at stage " + std::to_string(t));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t a = 0; a < p; ++a) {
        const Rational& coeff = (*solution)[i * p + a];
        if (sgn(coeff) == 0) continue;
        for (std::size_t c = 0; c < n; ++c) x[i][c] += coeff * w(a, c);
      }
  }

  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (!is_zero(defect(i, j))) throw Error(ErrorCode::LiftFailure, "lifted complement is not a subalgebra");

  Subspace levi(n, x);
  if (levi.dim() != s || !intersect(levi, rad).is_zero()) {
    throw Error(ErrorCode::LiftFailure, "lifted complement does not meet the radical trivially");
  }
  return {std::move(levi), std::move(rad)};
}

}  // namespace liecartan
