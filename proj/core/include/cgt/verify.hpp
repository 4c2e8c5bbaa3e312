#pragma once

#include <string>

#include "cgt/instance.hpp"

namespace cgt {

struct Verdict {
  bool ok = false;
  std::string violated;  // name of the first failing predicate when !ok
  Weight weight = 0;     // scaled total weight of the witness (0 for BFP)
};

/// Checks `witness` against the kind-specific solution predicate of
/// `instance` (path/cycle shape, parity, terminals, disjointness, T-join
/// degrees) and against the bound k when one is present.
Verdict verify_witness(const ProblemInstance& instance, const Witness& witness);

}  // namespace cgt
