#include "moore57/error.hpp"

namespace moore57 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArray: return "InvalidArray";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::InfeasibleArray: return "InfeasibleArray";
    case ErrorCode::InadmissibleBlock: return "InadmissibleBlock";
    case ErrorCode::NegativeRhs: return "NegativeRhs";
    case ErrorCode::ConflictingConstraint: return "ConflictingConstraint";
    case ErrorCode::NotInNullSpace: return "NotInNullSpace";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::UnboundedLattice: return "UnboundedLattice";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::InvalidPermSystem: return "InvalidPermSystem";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Error";
}

}  // namespace moore57
