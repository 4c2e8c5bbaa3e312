#pragma once

#include <optional>
#include <vector>

#include "cgt/edge_set.hpp"
#include "cgt/graph.hpp"

namespace cgt {

/// Returns w[F]: a copy of `g` with the weight of every edge in `flip` negated.
/// Ids and order are preserved. Throws kUnknownEdge.
UndirectedGraph weight_flip(const UndirectedGraph& g, const EdgeSet& flip);

/// Copy of `g` with every weight replaced by its absolute value.
UndirectedGraph absolute_weights(const UndirectedGraph& g);

/// True iff the odd-degree vertices of `join` are exactly `terminals`.
bool is_tjoin(const UndirectedGraph& g, const TerminalSet& terminals, const EdgeSet& join);

/// Splits an edge set with all degrees even into edge-disjoint cycles.
///
/// Walks always leave a vertex along its lowest-id unused edge, and a cycle is
/// cut off as soon as the walk revisits a vertex, so the output depends only on
/// the edge ids. Throws kOddDegreeVertex.
std::vector<EdgeSet> decompose_even_subgraph(const UndirectedGraph& g, const EdgeSet& join);

// Structural predicates.

/// Connected, non-empty, every vertex of V(C) has degree exactly 2.
bool is_cycle(const UndirectedGraph& g, const EdgeSet& c);

/// Simple (s,t)-path for s != t; for s == t this is a cycle through s.
bool is_path(const UndirectedGraph& g, const EdgeSet& p, VertexId s, VertexId t);

bool is_bipartite(const UndirectedGraph& g);

/// True iff no two negative edges share an endpoint.
bool negatives_form_matching(const UndirectedGraph& g);

/// Component label (0-based, in order of the smallest member) per vertex 1..n;
/// index 0 is unused.
std::vector<int> connected_components(const UndirectedGraph& g);

/// The vertices of a simple path or cycle in traversal order, starting at
/// `from`. Returns nullopt if `p` is not a path/cycle through `from`.
std::optional<std::vector<VertexId>> path_vertices(const UndirectedGraph& g,
                                                    const EdgeSet& p, VertexId from);

}  // namespace cgt
