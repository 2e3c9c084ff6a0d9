#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "liecartan/lie_algebra.hpp"
#include "liecartan/powermap.hpp"

namespace liecartan {

/// AlgebraFile:
///   { "name": str, "dim": int, "basis": [str...],
///     "brackets": { "i,j": { "k": "p/q", ... }, ... } }
/// with zero-based i < j < dim and k < dim; omitted entries are zero.
/// Throws ParseError, IndexOutOfRange, JacobiViolation.
LieAlgebra parse_algebra(const nlohmann::json& doc, JacobiCheck check = JacobiCheck::Auto);
LieAlgebra load_algebra(const std::filesystem::path& path, JacobiCheck check = JacobiCheck::Auto);
nlohmann::json algebra_to_json(const LieAlgebra& g);

/// { "name": str, "cartan_classes": [ { "vector_rank": int, "torus_rank": int,
///   "component_orders": [int...] } ] }
GroupDensityInstance parse_instance(const nlohmann::json& doc);
GroupDensityInstance load_instance(const std::filesystem::path& path);
nlohmann::json instance_to_json(const GroupDensityInstance& instance);

nlohmann::json load_json(const std::filesystem::path& path);

nlohmann::json vector_to_json(std::span<const Rational> v);
/// { "dim": d, "basis": [[...]], "labels": ["h + e", ...] }
nlohmann::json subspace_to_json(const Subspace& s, const std::vector<std::string>& labels);
nlohmann::json matrix_to_json(const Matrix& m);

/// "1,0,0;0,1/2,0" -> span of the listed rows. Throws ParseError.
Subspace parse_rows(std::string_view text, std::size_t dim);

}  // namespace liecartan
