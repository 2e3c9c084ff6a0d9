#include "liecartan/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "liecartan/error.hpp"

namespace liecartan {

using nlohmann::json;

namespace {

std::size_t parse_index(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw Error(ErrorCode::ParseError, std::string(what) + " \"" + std::string(text) + "\" is not an index");
  }
  return value;
}

Rational parse_scalar(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  throw Error(ErrorCode::ParseError, "coefficient " + value.dump() + " must be a rational string such as \"3/2\"");
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::uint64_t require_uint(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

LieAlgebra parse_algebra(const json& doc, JacobiCheck check) {
  const std::size_t dim = require_uint(doc, "dim");
  std::string name = doc.contains("name") && doc.at("name").is_string() ? doc.at("name").get<std::string>() : "";

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    const json& basis = doc.at("basis");
    if (!basis.is_array() || basis.size() != dim) throw Error(ErrorCode::ParseError, "\"basis\" must list dim labels");
    for (const auto& l : basis) {
      if (!l.is_string()) throw Error(ErrorCode::ParseError, "basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }

  StructureConstants constants;
  const json& brackets = require(doc, "brackets");
  if (!brackets.is_object()) throw Error(ErrorCode::ParseError, "\"brackets\" must be an object");
  for (const auto& [key, entry] : brackets.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "bracket key \"" + key + "\" is not \"i,j\"");
    const std::size_t i = parse_index(trim(std::string_view(key).substr(0, comma)), "bracket index");
    const std::size_t j = parse_index(trim(std::string_view(key).substr(comma + 1)), "bracket index");
    if (i >= dim || j >= dim) {
      throw Error(ErrorCode::IndexOutOfRange, "bracket key \"" + key + "\" exceeds dim " + std::to_string(dim));
    }
    if (i >= j) throw Error(ErrorCode::ParseError, "bracket key \"" + key + "\" must have i < j");
    if (!entry.is_object()) throw Error(ErrorCode::ParseError, "bracket \"" + key + "\" must map indices to rationals");
    SparseVector out;
    for (const auto& [k_text, coeff] : entry.items()) {
      const std::size_t k = parse_index(trim(k_text), "output index");
      if (k >= dim) {
        throw Error(ErrorCode::IndexOutOfRange, "output index " + k_text + " in bracket \"" + key + "\" exceeds dim");
      }
      out[k] = parse_scalar(coeff);
    }
    constants[{i, j}] = std::move(out);
  }
  return LieAlgebra(std::move(labels), constants, check, std::move(name));
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

LieAlgebra load_algebra(const std::filesystem::path& path, JacobiCheck check) {
  return parse_algebra(load_json(path), check);
}

json algebra_to_json(const LieAlgebra& g) {
  json brackets = json::object();
  for (const auto& [key, value] : g.structure_constants()) {
    json entry = json::object();
    for (const auto& [k, c] : value) entry[std::to_string(k)] = format_rational(c);
    brackets[std::to_string(key.first) + "," + std::to_string(key.second)] = std::move(entry);
  }
  return json{{"name", g.name()}, {"dim", g.dim()}, {"basis", g.labels()}, {"brackets", std::move(brackets)}};
}

GroupDensityInstance parse_instance(const json& doc) {
  GroupDensityInstance instance;
  instance.name = doc.contains("name") && doc.at("name").is_string() ? doc.at("name").get<std::string>() : "";
  const json& classes = require(doc, "cartan_classes");
  if (!classes.is_array()) throw Error(ErrorCode::ParseError, "\"cartan_classes\" must be an array");
  for (const auto& c : classes) {
    CartanGroupModel model;
    model.vector_rank = require_uint(c, "vector_rank");
    model.torus_rank = require_uint(c, "torus_rank");
    const json& orders = require(c, "component_orders");
    if (!orders.is_array()) throw Error(ErrorCode::ParseError, "\"component_orders\" must be an array");
    for (const auto& m : orders) {
      if (!m.is_number_integer()) throw Error(ErrorCode::ParseError, "component orders must be integers");
      const auto value = m.get<std::int64_t>();
      if (value < 2) throw Error(ErrorCode::InvalidOrder, "component order " + std::to_string(value) + " is below 2");
      model.component_orders.push_back(static_cast<std::uint64_t>(value));
    }
    instance.cartan_models.push_back(std::move(model));
  }
  return instance;
}

GroupDensityInstance load_instance(const std::filesystem::path& path) { return parse_instance(load_json(path)); }

json instance_to_json(const GroupDensityInstance& instance) {
  json classes = json::array();
  for (const auto& m : instance.cartan_models) {
    classes.push_back({{"vector_rank", m.vector_rank},
                       {"torus_rank", m.torus_rank},
                       {"component_orders", m.component_orders}});
  }
  return json{{"name", instance.name}, {"cartan_classes", std::move(classes)}};
}

json vector_to_json(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(format_rational(q));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

json subspace_to_json(const Subspace& s, const std::vector<std::string>& labels) {
  json named = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) named.push_back(describe_vector(labels, s.row(i)));
  return json{{"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}, {"labels", std::move(named)}};
}

Subspace parse_rows(std::string_view text, std::size_t dim) {
  Matrix rows(0, dim);
  std::stringstream all{std::string(text)};
  std::string row_text;
  while (std::getline(all, row_text, ';')) {
    if (trim(row_text).empty()) continue;
    Vector row;
    std::stringstream entries(row_text);
    std::string entry;
    while (std::getline(entries, entry, ',')) row.push_back(parse_rational(trim(entry)));
    if (row.size() != dim) {
      throw Error(ErrorCode::ParseError, "row \"" + row_text + "\" has " + std::to_string(row.size()) +
                                             " entries, expected " + std::to_string(dim));
    }
    rows.append_row(row);
  }
  return Subspace(rows);
}

}  // namespace liecartan
