#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "liecartan/rational.hpp"

namespace liecartan {

enum class ErrorCode {
  DimensionMismatch,
  NotClosed,
  NotIdeal,
  NotCartan,
  NotSolvable,
  HypothesisViolated,
  NonNilpotentIterate,
  SearchExhausted,
  LiftFailure,
  InternalInconsistency,
  PostconditionFailure,
  JacobiViolation,
  ParseError,
  IndexOutOfRange,
  InvalidOrder,
  EmptyInstance,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when structure constants break the Jacobi identity. Names the
/// offending basis triple and the residual
/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
class JacobiViolation : public Error {
 public:
  JacobiViolation(std::array<std::size_t, 3> triple, Vector residual);

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }
  const Vector& residual() const noexcept { return residual_; }

 private:
  std::array<std::size_t, 3> triple_;
  Vector residual_;
};

}  // namespace liecartan
