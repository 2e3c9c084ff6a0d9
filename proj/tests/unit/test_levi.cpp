#include <gtest/gtest.h>

#include "liecartan/error.hpp"
#include "liecartan/levi.hpp"
#include "liecartan/radicals.hpp"
#include "support.hpp"

namespace liecartan {
namespace {

using test::fixture;
using test::span;
using test::vec;

void expect_levi(const LieAlgebra& g, std::size_t levi_dim) {
  const LeviDecomposition d = levi_decomposition(g);
  EXPECT_EQ(d.levi.dim(), levi_dim) << g.name();
  EXPECT_EQ(d.radical, radical(g)) << g.name();
  EXPECT_TRUE(intersect(d.levi, d.radical).is_zero()) << g.name();
  EXPECT_TRUE((d.levi + d.radical).is_whole()) << g.name();
  EXPECT_TRUE(is_subalgebra(g, d.levi)) << g.name();
  if (!d.levi.is_zero()) EXPECT_TRUE(is_semisimple(induced_algebra(g, d.levi).algebra())) << g.name();
}

TEST(Levi, Catalog) {
  expect_levi(fixture("sl2"), 3);
  expect_levi(fixture("gl2"), 3);
  expect_levi(fixture("sl2xR2"), 3);
  expect_levi(fixture("sl2xR2R"), 3);
  expect_levi(fixture("sl2xh3"), 3);
  expect_levi(fixture("e2"), 0);
  expect_levi(fixture("heisenberg"), 0);
}

TEST(Levi, TwistedBasisNeedsCorrections) {
  // In these fixtures the labelled sl2 part is not closed, so the
  // complement of the radical must be corrected.
  for (const char* name : {"sl2xR2_twisted", "sl2xh3_twisted"}) {
    const LieAlgebra g = fixture(name);
    const Subspace r = radical(g);
    Subspace naive = Subspace::zero(g.dim());
    for (auto i : r.complement_indices()) naive = naive + Subspace(g.dim(), {unit_vector(g.dim(), i)});
    EXPECT_FALSE(is_subalgebra(g, naive)) << name;
    expect_levi(g, 3);
  }
}

TEST(Levi, InducedAlgebraRoundTrip) {
  const LieAlgebra g = fixture("sl2xR2R");
  const Subspace r = radical(g);
  const InducedAlgebra a = induced_algebra(g, r);
  EXPECT_EQ(a.algebra().dim(), 3u);
  EXPECT_EQ(a.to_ambient(Subspace::whole(3)), r);
  EXPECT_EQ(a.from_ambient(r), Subspace::whole(3));
  // The radical here is abelian.
  EXPECT_TRUE(a.algebra().structure_constants().empty());
}

TEST(Levi, InducedSl2HasSl2Brackets) {
  const LieAlgebra g = fixture("gl2");
  const InducedAlgebra s = induced_algebra(g, levi_decomposition(g).levi);
  EXPECT_EQ(determinant(killing_form(s.algebra())), Rational(-128));
}

TEST(Levi, NonClosedBasisThrows) {
  const LieAlgebra g = fixture("sl2");
  const Matrix rows = Matrix::from_rows(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  try {
    (void)algebra_on_basis(g, rows);
    FAIL() << "expected NotClosed";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
}

}  // namespace
}  // namespace liecartan
