#include "cgt/error.hpp"

namespace cgt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kOddDegreeVertex: return "OddDegreeVertex";
    case ErrorCode::kNoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kOddTerminalCount: return "OddTerminalCount";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kNotConservative: return "NotConservative";
    case ErrorCode::kNotATJoin: return "NotATJoin";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kMissingSplitEdge: return "MissingSplitEdge";
    case ErrorCode::kInfeasibleOddJoin: return "InfeasibleOddJoin";
    case ErrorCode::kNotEvenDegrees: return "NotEvenDegrees";
    case ErrorCode::kEvenParity: return "EvenParity";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cgt
