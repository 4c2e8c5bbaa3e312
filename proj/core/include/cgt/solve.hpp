#pragma once

#include <string>

#include "cgt/instance.hpp"
#include "cgt/oracle.hpp"

namespace cgt {

enum class SolveStatus {
  kSolved,      // optimum found (and within the bound, if any)
  kInfeasible,  // no feasible solution / BFP no-instance
  kOverBound,   // optimum found but it exceeds k
};

enum class Engine {
  kDefault,  // polynomial algorithms where they exist, exhaustive search otherwise
  kOracle,   // exhaustive search for every kind
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  Weight weight = 0;  // scaled; 0 for BFP
  Witness witness;
};

/// Solves a typed instance. Exhaustive parts honour `budget` and throw
/// kBudgetExceeded or kTooLarge. The default engine throws kNotConservative
/// for kinds that are only defined over conservative weights.
SolveOutcome solve_instance(const ProblemInstance& instance, Engine engine,
                            oracle::SearchBudget budget = {});

}  // namespace cgt
