#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liecartan/lie_algebra.hpp"
#include "liecartan/powermap.hpp"

namespace liecartan {

enum class CheckStatus { Pass, Fail, Reported };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string id;
  std::string anchor;
  std::string subject;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json witness;  // null unless the check did not pass
};

struct CheckCounts {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t reported = 0;
  std::size_t total() const { return passed + failed + reported; }
};

struct FixtureReport {
  std::string name;
  std::string source;
  std::vector<CheckResult> checks;

  CheckCounts counts() const;
  nlohmann::json to_json() const;
};

struct VerificationReport {
  std::vector<FixtureReport> fixtures;  // sorted by name

  CheckCounts counts() const;
  bool all_passed() const { return counts().failed == 0; }
  nlohmann::json to_json() const;
};

/// Check id -> the mathematical statement it exercises.
const std::string& check_anchor(const std::string& id);
std::vector<std::string> check_ids();

// ---- Verification matrix ---------------------------------------------------

/// Named ideals: zero, whole, radical, nilradical, derived, center,
/// radical_derived. Explicit ideals carry row text as accepted by parse_rows.
struct IdealEntry {
  std::string name;
  std::string rows;  // empty for named ideals
};

struct AlgebraExpectation {
  std::optional<std::size_t> rank;
  std::optional<std::size_t> radical_dim;
  std::optional<std::size_t> nilradical_dim;
  std::optional<std::size_t> levi_dim;
  std::optional<bool> semisimple;
  std::optional<Rational> killing_det;
};

struct AlgebraEntry {
  std::filesystem::path file;
  std::vector<IdealEntry> ideals;
  AlgebraExpectation expect;
};

struct ModelEntry {
  std::filesystem::path file;
  std::optional<bool> weakly_exponential;
};

/// A subgroup H, the quotient G/H and the group G, as instance files.
struct ModelTriple {
  std::string name;
  std::filesystem::path subgroup;
  std::filesystem::path quotient;
  std::filesystem::path group;
};

struct VerificationMatrix {
  std::vector<AlgebraEntry> algebras;
  std::vector<ModelEntry> models;
  std::vector<ModelTriple> triples;
  std::uint64_t k_max = 60;
};

std::vector<IdealEntry> standard_ideals();

/// Reads <data_dir>/verify_matrix.json; algebra files resolve against
/// <data_dir>/algebras and model files against <data_dir>/models.
VerificationMatrix load_verification_matrix(const std::filesystem::path& data_dir);

std::filesystem::path default_data_dir();

Subspace resolve_ideal(const LieAlgebra& g, const IdealEntry& entry);

// ---- Harness ---------------------------------------------------------------

FixtureReport verify_algebra(const LieAlgebra& g, const AlgebraEntry& entry);
/// Loads the file (load failures become a failed check) and verifies it.
FixtureReport verify_algebra_file(const AlgebraEntry& entry);
FixtureReport verify_models(const VerificationMatrix& matrix);

struct VerifyOptions {
  bool include_models = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

VerificationReport run_verification(const VerificationMatrix& matrix, const VerifyOptions& options = {});

}  // namespace liecartan
