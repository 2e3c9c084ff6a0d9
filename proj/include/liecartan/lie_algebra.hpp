#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liecartan/linalg.hpp"
#include "liecartan/subspace.hpp"

namespace liecartan {

/// k -> c^k, zero entries omitted.
using SparseVector = std::map<std::size_t, Rational>;

/// (i, j) with i < j -> [e_i, e_j]. Entries for j < i are implied by
/// antisymmetry and never stored.
using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

enum class JacobiCheck {
  Auto,  // check when dim <= kJacobiAutoLimit
  Skip,
  Force,
};

inline constexpr std::size_t kJacobiAutoLimit = 32;

/// Finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis e_0..e_{n-1}. Immutable; copies share storage.
class LieAlgebra {
 public:
  /// Zero-dimensional algebra.
  LieAlgebra();
  LieAlgebra(std::vector<std::string> labels, const StructureConstants& constants,
             JacobiCheck check = JacobiCheck::Auto, std::string name = {});

  static LieAlgebra abelian(std::size_t dim, std::string name = {});

  std::size_t dim() const noexcept;
  const std::string& name() const noexcept;
  const std::vector<std::string>& labels() const noexcept;
  const StructureConstants& structure_constants() const noexcept;

  /// [e_i, e_j] as a dense vector.
  const Vector& bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  /// Matrix of ad(x) acting on column vectors: ad(x) v = [x, v].
  Matrix ad(std::span<const Rational> x) const;
  const Matrix& ad_basis(std::size_t i) const;

  /// Throws JacobiViolation on the first failing triple i < j < k.
  void check_jacobi() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// ---- Subspace constructions ------------------------------------------------

/// span{[a, b] : a in A, b in B}.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// Smallest bracket-closed subspace containing the vectors.
Subspace subalgebra_closure(const LieAlgebra& g, const std::vector<Vector>& vectors);
/// Smallest ideal containing the vectors.
Subspace ideal_closure(const LieAlgebra& g, const std::vector<Vector>& vectors);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

/// {x : [x, L] in L}.
Subspace normalizer(const LieAlgebra& g, const Subspace& l);
/// {x : [x, s] = 0 for all s in S}.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);
Subspace center(const LieAlgebra& g);

// ---- Series ----------------------------------------------------------------

/// A, [A,A], [A,[A,A]], ... up to and including the first repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& a);
/// A, [A,A], [[A,A],[A,A]], ... up to and including the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& a);

bool is_nilpotent(const LieAlgebra& g, const Subspace& a);
bool is_solvable(const LieAlgebra& g, const Subspace& a);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);

// ---- Forms and operators ---------------------------------------------------

/// kappa(e_i, e_j) = tr(ad e_i ad e_j).
Matrix killing_form(const LieAlgebra& g);

bool is_nilpotent_operator(const Matrix& a);
bool is_ad_nilpotent(const LieAlgebra& g, std::span<const Rational> x);

/// Human-readable linear combination such as "h", "e - 2*f" or "0".
std::string describe_vector(const std::vector<std::string>& labels, std::span<const Rational> v);

/// Generalized 0-eigenspace of ad(x): ker ad(x)^dim.
Subspace fitting_null_component(const LieAlgebra& g, std::span<const Rational> x);

}  // namespace liecartan
