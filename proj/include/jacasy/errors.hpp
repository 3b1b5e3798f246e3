#pragma once

#include <stdexcept>
#include <string>

namespace jacasy {

enum class ErrorCode {
  InvalidArgument,
  PoleAtEndpoint,
  OutsideAnalyticRegion,
  NoConvergence,
  ContourTooClose,
  InsufficientCoefficients,
  DomainError,
  InsideDisk,
  OutsideDisk,
  InvalidDegree,
  NegativeSquare,
  NewtonStall,
  DuplicateRoot,
  DegreeExceedsTable,
  EigenFailure,
  ParseError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PoleAtEndpoint: return "PoleAtEndpoint";
    case ErrorCode::OutsideAnalyticRegion: return "OutsideAnalyticRegion";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ContourTooClose: return "ContourTooClose";
    case ErrorCode::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InsideDisk: return "InsideDisk";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::NegativeSquare: return "NegativeSquare";
    case ErrorCode::NewtonStall: return "NewtonStall";
    case ErrorCode::DuplicateRoot: return "DuplicateRoot";
    case ErrorCode::DegreeExceedsTable: return "DegreeExceedsTable";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jacasy
