#include <gtest/gtest.h>

#include "liecartan/error.hpp"
#include "liecartan/io.hpp"
#include "support.hpp"

namespace liecartan {
namespace {

using nlohmann::json;
using test::vec;

ErrorCode parse_error_code(const std::string& text) {
  try {
    (void)parse_algebra(json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

TEST(Io, EmptyBracketsGiveAbelian) {
  const LieAlgebra g = parse_algebra(json::parse(R"({"name":"a","dim":2,"basis":["p","q"],"brackets":{}})"));
  EXPECT_EQ(g.dim(), 2u);
  EXPECT_TRUE(g.structure_constants().empty());
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"p", "q"}));
}

TEST(Io, RationalStringsAndIntegers) {
  const LieAlgebra g =
      parse_algebra(json::parse(R"({"name":"r","dim":2,"basis":["x","y"],"brackets":{"0,1":{"1":"-3/2"}}})"));
  EXPECT_EQ(g.bracket_basis(0, 1), (Vector{Rational(0), Rational(-3, 2)}));
  const LieAlgebra h = parse_algebra(json::parse(R"({"name":"r","dim":2,"basis":["x","y"],"brackets":{"0,1":{"1":2}}})"));
  EXPECT_EQ(h.bracket_basis(0, 1), vec({0, 2}));
}

TEST(Io, RoundTripIsBitExact) {
  const LieAlgebra g = test::fixture("sl2xR2_twisted");
  const json doc = algebra_to_json(g);
  EXPECT_EQ(algebra_to_json(parse_algebra(doc)), doc);
  EXPECT_EQ(doc, load_json(test::data_dir() / "algebras" / "sl2xR2_twisted.json"));
}

TEST(Io, Rejections) {
  EXPECT_EQ(parse_error_code(R"({"dim":2,"basis":["x","y"],"brackets":{"0,1":{"1":0.5}}})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code(R"({"dim":2,"basis":["x","y"],"brackets":{"1,0":{"1":"1"}}})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code(R"({"dim":2,"basis":["x","y"],"brackets":{"0,2":{"1":"1"}}})"), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(parse_error_code(R"({"dim":2,"basis":["x","y"],"brackets":{"0,1":{"7":"1"}}})"), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(parse_error_code(R"({"dim":3,"basis":["x","y"],"brackets":{}})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code(R"({"dim":2,"basis":["x","y"],"brackets":{"0,1":{"1":"1/0"}}})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_code(R"([1,2])"), ErrorCode::ParseError);
  EXPECT_THROW((void)load_algebra("/nonexistent/algebra.json"), Error);
}

TEST(Io, ParseRows) {
  const Subspace s = parse_rows("1,0,0;0,1/2,1", 3);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(vec({0, 1, 2})));
  EXPECT_THROW((void)parse_rows("1,0", 3), Error);
  EXPECT_THROW((void)parse_rows("1,x,0", 3), Error);
}

TEST(Io, SubspaceJson) {
  const LieAlgebra g = test::fixture("sl2");
  const json j = subspace_to_json(Subspace(3, {vec({0, 1, -2})}), g.labels());
  EXPECT_EQ(j.at("dim"), 1);
  EXPECT_EQ(j.at("basis"), json::parse(R"([["0","1","-2"]])"));
  EXPECT_EQ(j.at("labels"), json::parse(R"(["e - 2*f"])"));
}

}  // namespace
}  // namespace liecartan
