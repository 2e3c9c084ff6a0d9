#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace liecartan {

/// Exact scalar. GMP keeps every value in lowest terms with a positive
/// denominator once canonicalized.
using Rational = mpq_class;

/// Coordinate vector with respect to a fixed basis.
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional leading sign). Throws Error{ParseError}.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

}  // namespace liecartan
