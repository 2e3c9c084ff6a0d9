#include "liecartan/rational.hpp"

#include <algorithm>
#include <cctype>

#include "liecartan/error.hpp"

namespace liecartan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotIdeal: return "NotIdeal";
    case ErrorCode::NotCartan: return "NotCartan";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NonNilpotentIterate: return "NonNilpotentIterate";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::PostconditionFailure: return "PostconditionFailure";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::EmptyInstance: return "EmptyInstance";
  }
  return "Unknown";
}

namespace {

std::string describe_triple(const std::array<std::size_t, 3>& t, const Vector& residual) {
  std::string s = "Jacobi identity fails for basis triple (" + std::to_string(t[0]) + "," +
                  std::to_string(t[1]) + "," + std::to_string(t[2]) + "), residual [";
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(residual[i]);
  }
  return s + "]";
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

JacobiViolation::JacobiViolation(std::array<std::size_t, 3> triple, Vector residual)
    : Error(ErrorCode::JacobiViolation, describe_triple(triple, residual)),
      triple_(triple),
      residual_(std::move(residual)) {}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "not a rational literal: \"" + std::string(text) + "\"");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

}  // namespace liecartan
