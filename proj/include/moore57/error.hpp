#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moore57 {

enum class ErrorCode {
  Parse,
  OutOfRange,
  InvalidArray,
  NonIntegralMultiplicity,
  InfeasibleArray,
  InadmissibleBlock,
  NegativeRhs,
  ConflictingConstraint,
  NotInNullSpace,
  Infeasible,
  UnboundedLattice,
  Unrealizable,
  InvalidPermSystem,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so the CLI can map it
// onto exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moore57
