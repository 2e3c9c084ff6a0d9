#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>

#include "liecartan/io.hpp"
#include "liecartan/subspace.hpp"

namespace liecartan::test {

inline std::filesystem::path data_dir() { return LIECARTAN_DATA_DIR; }
inline std::filesystem::path test_data_dir() { return LIECARTAN_TEST_DATA_DIR; }

inline LieAlgebra fixture(const std::string& name) {
  return load_algebra(data_dir() / "algebras" / (name + ".json"), JacobiCheck::Force);
}

inline Vector vec(std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.emplace_back(x);
  return v;
}

inline Subspace span(std::size_t dim, std::initializer_list<Vector> rows) { return Subspace(dim, std::vector<Vector>(rows)); }

}  // namespace liecartan::test
