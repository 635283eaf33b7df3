#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcmlat {

enum class ErrorCode {
  BadParameter,
  NotALattice,
  NotBounded,
  CyclicCovers,
  NotComparable,
  NotAtomic,
  UnitGenerator,
  EmptyGeneratorSet,
  NoEdges,
  TooLarge,
  ParseError,
  EquivalenceViolation,
  ContractViolation,
  TheoremViolation,
  BadTheoremId,
  ResourceLimit,
};

std::string_view error_code_name(ErrorCode code);

/**
 * Library-wide exception. Every failure mode named in the public API maps to
 * one ErrorCode so callers (and tests) can dispatch on the kind of failure
 * without parsing messages.
 */
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::CyclicCovers: return "CyclicCovers";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotAtomic: return "NotAtomic";
    case ErrorCode::UnitGenerator: return "UnitGenerator";
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorCode::ContractViolation: return "ContractViolation";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::BadTheoremId: return "BadTheoremId";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

}  // namespace lcmlat
