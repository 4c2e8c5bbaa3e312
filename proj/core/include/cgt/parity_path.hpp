#pragma once

#include "cgt/graph.hpp"
#include "cgt/tjoin.hpp"

namespace cgt {

enum class Parity { kEven, kOdd };

struct ParityPathQuery {
  VertexId s = 0;
  VertexId t = 0;
  Parity parity = Parity::kOdd;
};

/// Shortest simple (s,t)-path with an even or odd number of edges, for
/// non-negative weights.
///
/// Two copies A and B of the graph are joined by zero-weight rungs a_v–b_v
/// for every v other than s and t; b_s is removed, and so is b_t (odd query)
/// or a_t (even query). A perfect matching then follows the path s ... t,
/// alternating between A-edges and B-edges, so the copy holding t fixes the
/// parity. The rest of the matching is rungs and closed alternating pieces of
/// non-negative weight, which are dropped.
///
/// Throws kNegativeWeight, kInvalidInput (s == t), kInfeasible.
PathResult shortest_parity_path_nonneg(const UndirectedGraph& g, const ParityPathQuery& q);

}  // namespace cgt
