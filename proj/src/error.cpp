#include "isodescent/error.hpp"

namespace isod {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::BothZero: return "BothZero";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadPartitionsExist: return "BadPartitionsExist";
    case Errc::NotInS: return "NotInS";
    case Errc::AlreadyMaximal: return "AlreadyMaximal";
    case Errc::PointDivisibleByF: return "PointDivisibleByF";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::PhiSZero: return "PhiSZero";
    case Errc::DegreeLawViolated: return "DegreeLawViolated";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::PremiseViolated: return "PremiseViolated";
    case Errc::NoDiagonalFullSolution: return "NoDiagonalFullSolution";
    case Errc::UnderdeterminedDegenerate: return "UnderdeterminedDegenerate";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::MaxRoundsExceeded: return "MaxRoundsExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace isod
