#pragma once

#include "cgt/edge_set.hpp"
#include "cgt/graph.hpp"

namespace cgt {

struct TJoinResult {
  EdgeSet join;
  Weight weight = 0;
};

struct PathResult {
  EdgeSet edges;
  Weight weight = 0;
};

/// Minimum-weight T-join for non-negative weights: shortest-path distances
/// between terminals, a minimum-weight perfect matching on those distances,
/// and the symmetric difference of the matched shortest paths.
///
/// Throws kNegativeWeight, kOddTerminalCount, or kInfeasible (some component
/// holds an odd number of terminals).
TJoinResult min_tjoin_nonneg(const UndirectedGraph& g, const TerminalSet& terminals);

/// Minimum-weight T-join for arbitrary weights, by solving the non-negative
/// problem on |w| with terminals T Δ odd(E⁻) and flipping the answer by E⁻.
TJoinResult min_tjoin(const UndirectedGraph& g, const TerminalSet& terminals);

/// True iff no cycle has negative weight, i.e. iff E⁻ is itself a minimum
/// |w|-weight join for its own odd-degree vertices.
bool is_conservative(const UndirectedGraph& g);

/// Minimum-weight (s,t)-path in a conservative graph. Throws
/// kNotConservative, kInfeasible (different components), kInvalidInput (s == t).
PathResult shortest_path_conservative(const UndirectedGraph& g, VertexId s, VertexId t);

/// Deletes whole cycles from `join` until it is acyclic (inclusionwise minimal).
/// Only cycles of non-negative weight are removed, so the weight never goes
/// up; for a minimum join under conservative weights every such cycle has
/// weight zero. Throws kNotATJoin, or kNotConservative if a negative cycle
/// sits inside the join.
EdgeSet peel_minimal_join(const UndirectedGraph& g, const TerminalSet& terminals,
                          const EdgeSet& join);

}  // namespace cgt
