#include <gtest/gtest.h>

#include "liecartan/oracles.hpp"
#include "liecartan/radicals.hpp"
#include "support.hpp"

namespace liecartan {
namespace {

using test::fixture;
using test::span;
using test::vec;

TEST(Radicals, Semisimple) {
  for (const char* name : {"sl2", "sl2xsl2"}) {
    const LieAlgebra g = fixture(name);
    const RadicalPair rp = radicals(g);
    EXPECT_TRUE(rp.radical.is_zero()) << name;
    EXPECT_TRUE(rp.nilradical.is_zero()) << name;
    EXPECT_TRUE(is_semisimple(g)) << name;
  }
}

TEST(Radicals, EuclideanPlane) {
  // [r,p1] = p2, [r,p2] = -p1: solvable, translations form the nilradical.
  const LieAlgebra g = fixture("e2");
  EXPECT_TRUE(radical(g).is_whole());
  EXPECT_EQ(nilradical(g), span(3, {vec({0, 1, 0}), vec({0, 0, 1})}));
  EXPECT_FALSE(is_semisimple(g));
}

TEST(Radicals, AffineLine) {
  const LieAlgebra g = fixture("aff1");
  EXPECT_TRUE(radical(g).is_whole());
  EXPECT_EQ(nilradical(g), span(2, {vec({0, 1})}));
}

TEST(Radicals, ReductiveAndSemidirect) {
  EXPECT_EQ(radicals(fixture("gl2")).radical, span(4, {vec({0, 0, 0, 1})}));
  EXPECT_EQ(radicals(fixture("gl2")).nilradical, span(4, {vec({0, 0, 0, 1})}));
  const Subspace r = span(6, {vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 0, 1})});
  EXPECT_EQ(radical(fixture("sl2xR2R")), r);
  EXPECT_EQ(nilradical(fixture("sl2xh3")), r);
}

TEST(Radicals, NilpotentAlgebraIsItsOwnNilradical) {
  for (const char* name : {"abelian3", "heisenberg", "h5"}) {
    const LieAlgebra g = fixture(name);
    EXPECT_TRUE(nilradical(g).is_whole()) << name;
  }
}

TEST(Radicals, OscillatorNilradicalIsHeisenberg) {
  const LieAlgebra g = fixture("oscillator");
  EXPECT_EQ(nilradical(g), span(4, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}));
}

class RadicalOracle : public ::testing::TestWithParam<std::string> {};

TEST_P(RadicalOracle, MatchesEnumeratedMaxima) {
  const LieAlgebra g = fixture(GetParam());
  const auto solvable = oracle::largest_enumerated_solvable_ideal(g);
  const auto nilpotent = oracle::largest_enumerated_nilpotent_ideal(g);
  ASSERT_TRUE(solvable.has_value());
  ASSERT_TRUE(nilpotent.has_value());
  EXPECT_EQ(radical(g), *solvable);
  EXPECT_EQ(nilradical(g), *nilpotent);
  EXPECT_EQ(nilradical(g), nilradical_by_enumeration(g));
}

INSTANTIATE_TEST_SUITE_P(SmallCatalog, RadicalOracle,
                         ::testing::Values("abelian1", "abelian2", "abelian3", "heisenberg", "h5", "aff1", "e2",
                                           "oscillator", "sl2", "gl2", "sl2xR2", "sl2xR2_twisted", "r3_0", "r3_half",
                                           "r3_1", "r3_neg1"));

}  // namespace
}  // namespace liecartan
