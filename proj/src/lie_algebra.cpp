#include "liecartan/lie_algebra.hpp"

#include <string>

#include "liecartan/error.hpp"

namespace liecartan {

struct LieAlgebra::Data {
  std::string name;
  std::vector<std::string> labels;
  StructureConstants constants;
  std::vector<Vector> table;  // dim*dim dense brackets
  std::vector<Matrix> ad;     // ad(e_i)
};

LieAlgebra::LieAlgebra() : data_(std::make_shared<const Data>()) {}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const StructureConstants& constants,
                       JacobiCheck check, std::string name) {
  auto data = std::make_shared<Data>();
  const std::size_t n = labels.size();
  data->name = std::move(name);
  data->labels = std::move(labels);
  data->table.assign(n * n, Vector(n));

  for (const auto& [key, value] : constants) {
    const auto [i, j] = key;
    if (i >= n || j >= n || i >= j) {
      throw Error(ErrorCode::IndexOutOfRange, "structure constant key (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ") invalid for dim " +
                                                  std::to_string(n));
    }
    SparseVector cleaned;
    for (const auto& [k, c] : value) {
      if (k >= n) {
        throw Error(ErrorCode::IndexOutOfRange, "output index " + std::to_string(k) +
                                                    " out of range for dim " + std::to_string(n));
      }
      if (sgn(c) == 0) continue;
      cleaned.emplace(k, c);
      data->table[i * n + j][k] = c;
      data->table[j * n + i][k] = -c;
    }
    if (!cleaned.empty()) data->constants.emplace(key, std::move(cleaned));
  }

  data->ad.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = data->table[i * n + j][k];
    data->ad.push_back(std::move(m));
  }

  data_ = std::move(data);
  if (check == JacobiCheck::Force || (check == JacobiCheck::Auto && n <= kJacobiAutoLimit)) check_jacobi();
}

LieAlgebra LieAlgebra::abelian(std::size_t dim, std::string name) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("a" + std::to_string(i));
  return LieAlgebra(std::move(labels), {}, JacobiCheck::Skip, std::move(name));
}

std::size_t LieAlgebra::dim() const noexcept { return data_->labels.size(); }
const std::string& LieAlgebra::name() const noexcept { return data_->name; }
const std::vector<std::string>& LieAlgebra::labels() const noexcept { return data_->labels; }
const StructureConstants& LieAlgebra::structure_constants() const noexcept { return data_->constants; }

const Vector& LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw Error(ErrorCode::IndexOutOfRange, "basis index");
  return data_->table[i * dim() + j];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  return bracket(std::span<const Rational>(x), std::span<const Rational>(y));
}

Vector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "bracket arguments of length " + std::to_string(x.size()) +
                                                  " and " + std::to_string(y.size()) + " in dim " +
                                                  std::to_string(n));
  }
  Vector out(n);
  // Sum over unordered pairs i < j of (x_i y_j - x_j y_i) [e_i, e_j].
  for (const auto& [key, value] : data_->constants) {
    const auto [i, j] = key;
    const Rational coeff = x[i] * y[j] - x[j] * y[i];
    if (sgn(coeff) == 0) continue;
    for (const auto& [k, c] : value) out[k] += coeff * c;
  }
  return out;
}

Matrix LieAlgebra::ad(std::span<const Rational> x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "ad argument length");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    const Matrix& a = data_->ad[i];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(a(r, c)) != 0) m(r, c) += x[i] * a(r, c);
  }
  return m;
}

const Matrix& LieAlgebra::ad_basis(std::size_t i) const { return data_->ad.at(i); }

void LieAlgebra::check_jacobi() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = bracket(bracket_basis(i, j), unit_vector(n, k));
        const Vector b = bracket(bracket_basis(j, k), unit_vector(n, i));
        const Vector c = bracket(bracket_basis(k, i), unit_vector(n, j));
        for (std::size_t t = 0; t < n; ++t) r[t] += b[t] + c[t];
        if (!is_zero(r)) throw JacobiViolation({i, j, k}, std::move(r));
      }
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

void require_ambient(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspace of Q^" + std::to_string(s.ambient_dim()) +
                                                  " used in algebra of dim " + std::to_string(g.dim()));
  }
}

Subspace span_of(std::size_t n, const std::vector<Vector>& vectors) { return Subspace(n, vectors); }

}  // namespace

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  require_ambient(g, a);
  require_ambient(g, b);
  Matrix rows(0, g.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) rows.append_row(g.bracket(a.row(i), b.row(j)));
  return Subspace(rows);
}

Subspace subalgebra_closure(const LieAlgebra& g, const std::vector<Vector>& vectors) {
  Subspace current = span_of(g.dim(), vectors);
  while (true) {
    Subspace next = current + bracket_span(g, current, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

Subspace ideal_closure(const LieAlgebra& g, const std::vector<Vector>& vectors) {
  const Subspace whole = Subspace::whole(g.dim());
  Subspace current = span_of(g.dim(), vectors);
  while (true) {
    Subspace next = current + bracket_span(g, whole, current);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  require_ambient(g, s);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(g.bracket(s.row(i), s.row(j)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  require_ambient(g, s);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (!s.contains(g.ad_basis(i) * s.row_vector(r))) return false;
  return true;
}

Subspace normalizer(const LieAlgebra& g, const Subspace& l) {
  require_ambient(g, l);
  // [x, l_r] = -ad(l_r) x must be annihilated by every functional vanishing on L.
  const Matrix ann = l.annihilator();
  Matrix constraints(0, g.dim());
  if (ann.rows() > 0) {
    for (std::size_t r = 0; r < l.dim(); ++r) constraints.append_rows(ann * g.ad(l.row(r)));
  }
  return Subspace(nullspace(constraints));
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  require_ambient(g, s);
  Matrix constraints(0, g.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) constraints.append_rows(g.ad(s.row(r)));
  return Subspace(nullspace(constraints));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

std::vector<Subspace> lower_central_series(const LieAlgebra& g, const Subspace& a) {
  require_ambient(g, a);
  std::vector<Subspace> series{a};
  while (true) {
    Subspace next = bracket_span(g, a, series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

std::vector<Subspace> derived_series(const LieAlgebra& g, const Subspace& a) {
  require_ambient(g, a);
  std::vector<Subspace> series{a};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

bool is_nilpotent(const LieAlgebra& g, const Subspace& a) { return lower_central_series(g, a).back().is_zero(); }
bool is_solvable(const LieAlgebra& g, const Subspace& a) { return derived_series(g, a).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& g) { return is_nilpotent(g, Subspace::whole(g.dim())); }
bool is_solvable(const LieAlgebra& g) { return is_solvable(g, Subspace::whole(g.dim())); }

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = trace_of_product(g.ad_basis(i), g.ad_basis(j));
      k(j, i) = k(i, j);
    }
  }
  return k;
}

bool is_nilpotent_operator(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "nilpotency of non-square matrix");
  return power(a, a.rows()).is_zero();
}

bool is_ad_nilpotent(const LieAlgebra& g, std::span<const Rational> x) { return is_nilpotent_operator(g.ad(x)); }

Subspace fitting_null_component(const LieAlgebra& g, std::span<const Rational> x) {
  const Matrix p = power(g.ad(x), g.dim());
  return Subspace(nullspace(p));
}

std::string describe_vector(const std::vector<std::string>& labels, std::span<const Rational> v) {
  if (labels.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "describe_vector");
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int sign = sgn(v[i]);
    if (sign == 0) continue;
    const Rational magnitude = abs(v[i]);
    if (out.empty()) {
      if (sign < 0) out += "-";
    } else {
      out += sign < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += format_rational(magnitude) + "*";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace liecartan
