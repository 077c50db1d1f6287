#include "prymsv/error.hpp"

namespace prymsv {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MismatchedField: return "MismatchedField";
    case ErrorCode::InvalidDiscriminant: return "InvalidDiscriminant";
    case ErrorCode::UnsupportedResidue: return "UnsupportedResidue";
    case ErrorCode::SquareDiscriminant: return "SquareDiscriminant";
    case ErrorCode::ResidueMismatch: return "ResidueMismatch";
    case ErrorCode::NotDivisibleBy4: return "NotDivisibleBy4";
    case ErrorCode::OutsideTheoremHypotheses: return "OutsideTheoremHypotheses";
    case ErrorCode::MissingTableEntry: return "MissingTableEntry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BRequired: return "BRequired";
    case ErrorCode::InvalidPrototype: return "InvalidPrototype";
    case ErrorCode::SlitTooLong: return "SlitTooLong";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::AmbiguousGrouping: return "AmbiguousGrouping";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace prymsv
