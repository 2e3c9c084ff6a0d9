#include <gtest/gtest.h>

#include <set>

#include "liecartan/verify.hpp"
#include "support.hpp"

namespace liecartan {
namespace {

TEST(Verify, EveryCheckHasADistinctAnchor) {
  std::set<std::string> anchors;
  for (const auto& id : check_ids()) {
    EXPECT_FALSE(check_anchor(id).empty()) << id;
    anchors.insert(check_anchor(id));
  }
  EXPECT_EQ(anchors.size(), check_ids().size());
}

TEST(Verify, MatrixCoversTheCatalog) {
  const VerificationMatrix m = load_verification_matrix(test::data_dir());
  std::set<std::string> files;
  for (const auto& a : m.algebras) files.insert(a.file.stem().string());
  for (const char* name : {"abelian1", "abelian2", "abelian3", "heisenberg", "h5", "aff1", "e2", "oscillator", "sl2",
                           "gl2", "sl2xsl2", "sl2xR2", "sl2xR2R", "sl2xh3", "r3_0", "r3_half", "r3_1", "r3_neg1"}) {
    EXPECT_TRUE(files.count(name)) << name;
  }
  EXPECT_FALSE(m.models.empty());
  EXPECT_FALSE(m.triples.empty());
}

TEST(Verify, SingleFixtureReport) {
  const VerificationMatrix m = load_verification_matrix(test::data_dir());
  const auto it = std::find_if(m.algebras.begin(), m.algebras.end(),
                               [](const AlgebraEntry& a) { return a.file.stem() == "sl2xR2R"; });
  ASSERT_NE(it, m.algebras.end());
  const FixtureReport r = verify_algebra_file(*it);
  EXPECT_EQ(r.counts().failed, 0u) << r.to_json().dump(2);
  std::set<std::string> seen;
  for (const auto& c : r.checks) seen.insert(c.id);
  for (const char* id : {"cartan.composite", "cartan.radical_decomposition", "quotient.push", "quotient.lift",
                         "levi.decomposition", "radicals.structure"}) {
    EXPECT_TRUE(seen.count(id)) << id;
  }
}

TEST(Verify, LoadFailureIsAFailedCheck) {
  const FixtureReport r = verify_algebra_file({test::test_data_dir() / "jacobi_bad.json", standard_ideals(), {}});
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].id, "core.load");
  EXPECT_EQ(r.checks[0].status, CheckStatus::Fail);
  EXPECT_FALSE(r.checks[0].witness.is_null());
}

TEST(Verify, WrongExpectationFails) {
  AlgebraEntry entry{test::data_dir() / "algebras" / "sl2.json", {}, {}};
  entry.expect.rank = 2;
  const FixtureReport r = verify_algebra_file(entry);
  EXPECT_EQ(r.counts().failed, 1u);
}

}  // namespace
}  // namespace liecartan
