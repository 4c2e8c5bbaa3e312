#pragma once

#include <vector>

#include "cgt/graph.hpp"

namespace cgt {

struct MatchingEdge {
  int u;  // 0-based
  int v;  // 0-based
  Weight w;
};

/// Input to the perfect-matching engine. Vertices are 0..n-1; the edge list
/// need not describe a complete graph and may contain negative weights.
struct MatchingProblem {
  int n = 0;
  std::vector<MatchingEdge> edges;
};

struct Matching {
  std::vector<int> edges;  // indices into MatchingProblem::edges, ascending
  std::vector<int> mate;   // mate[v] for every vertex
  Weight weight = 0;
};

/// Exact minimum-weight perfect matching (Edmonds' blossom algorithm with
/// integer dual variables, O(n³)). Throws kNoPerfectMatching.
Matching min_weight_perfect_matching(const MatchingProblem& problem);

/// Maximum-weight matching among all maximum-cardinality matchings. Exposed
/// for testing the engine; weights may be arbitrary integers.
std::vector<int> max_weight_max_cardinality_matching(const MatchingProblem& problem);

}  // namespace cgt
