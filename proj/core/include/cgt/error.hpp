#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgt {

enum class ErrorCode {
  kInvalidInput,
  kUnknownEdge,
  kOddDegreeVertex,
  kNoPerfectMatching,
  kInfeasible,
  kOddTerminalCount,
  kNegativeWeight,
  kNotConservative,
  kNotATJoin,
  kInvalidWitness,
  kMissingSplitEdge,
  kInfeasibleOddJoin,
  kNotEvenDegrees,
  kEvenParity,
  kBudgetExceeded,
  kTooLarge,
  kParse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based line number of the offending record.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what),
        line_(line),
        detail_(what) {}

  int line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  std::string detail_;
};

}  // namespace cgt
