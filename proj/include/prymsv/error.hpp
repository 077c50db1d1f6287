#pragma once

#include <stdexcept>
#include <string>

namespace prymsv {

enum class ErrorCode {
  InvalidArgument = 1,
  MismatchedField,
  InvalidDiscriminant,
  UnsupportedResidue,
  SquareDiscriminant,
  ResidueMismatch,
  NotDivisibleBy4,
  OutsideTheoremHypotheses,
  MissingTableEntry,
  ParseError,
  BRequired,
  InvalidPrototype,
  SlitTooLong,
  DegenerateDirection,
  AmbiguousGrouping,
  IoError,
  Internal
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace prymsv
