#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isod {

/// Error kinds raised by the library. Each maps to a stable name used in
/// reports (see errc_name).
enum class Errc {
  DivisionByZero,
  MixedFields,
  NotInvertible,
  BothZero,
  ConstantInput,
  ZeroPolynomial,
  ReducibleModulus,
  ArityMismatch,
  SyntaxError,
  NotHomogeneous,
  DegreeMismatch,
  ZeroForm,
  ZeroVector,
  NotCoprime,
  OutOfRange,
  CapExceeded,
  BadPartitionsExist,
  NotInS,
  AlreadyMaximal,
  PointDivisibleByF,
  NotDivisible,
  PhiSZero,
  DegreeLawViolated,
  VerificationFailed,
  PremiseViolated,
  NoDiagonalFullSolution,
  UnderdeterminedDegenerate,
  BudgetExceeded,
  MaxRoundsExceeded,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(Errc::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace isod
