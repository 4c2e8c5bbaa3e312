#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/edge_set.hpp"
#include "cgt/graph.hpp"
#include "cgt/instance.hpp"
#include "cgt/oracle.hpp"
#include "cgt/tjoin.hpp"

namespace cgt {

enum class Gadget {
  kBfpToSocp,         // split every vertex but t; arcs +1, split edges -1
  kSocpToSop,         // move the -1 split edge at p onto a new endpoint s'
  kBfpToDisp,         // split every vertex including t
  kSpToSop,           // parallel 1-edge and 2-edge zero-weight links t -> t'
  kMotjZeroToNonneg,  // odd empty-join under conservative w -> odd T-join under |w|
};

std::string_view to_string(Gadget gadget);
std::optional<Gadget> parse_gadget(std::string_view token);

/// A typed id on one side of a reduction: 'v' vertex, 'e' edge, 'a' arc, or
/// '-' when the element has no counterpart.
struct ElementRef {
  char kind = '-';
  int id = 0;

  bool operator==(const ElementRef&) const = default;
};

struct MapEntry {
  ElementRef source;
  ElementRef target;
  std::string tag;  // "out", "in", "split", "neg", "gadget", or empty

  bool operator==(const MapEntry&) const = default;
};

struct WitnessMap {
  Gadget gadget = Gadget::kBfpToSocp;
  std::vector<MapEntry> entries;

  /// Source counterpart of a target element, if mapped.
  std::optional<ElementRef> source_of(ElementRef target) const;
  /// Target elements of a given source element, in map order.
  std::vector<MapEntry> entries_for_source(ElementRef source) const;

  bool operator==(const WitnessMap&) const = default;
};

struct ReducedInstance {
  ProblemInstance instance;
  WitnessMap map;
};

// Back-and-forth paths -> odd cycle through a point.

/// Vertices other than t split into an out-copy and an in-copy joined by a
/// -1 edge; arc uv becomes the +1 edge u_out v_in. Target: SOCp with p = s_out
/// and k = 1. The negative edges form a matching and G - t is bipartite.
ReducedInstance reduce_bfp_to_socp(const Digraph& d, VertexId s, VertexId t);

/// Recovers the directed cycle through s and t from an odd cycle of weight at
/// most 1 through s_out. Throws kInvalidWitness.
oracle::BackAndForth lift_socp_to_bfp(const Digraph& d, VertexId s, VertexId t,
                                      const ReducedInstance& reduced, const EdgeSet& cycle);

// Odd cycle through a point -> odd path.

enum class SplitMode {
  kRequire,  // throw kMissingSplitEdge when p has no negative edge
  kAuto,     // fall back to the s = t form when p has no negative edge
};

/// Replaces the negative edge p-x at p (lowest id) by s'-x for a new vertex
/// s', giving an SOP instance between p and s'. Without such an edge (kAuto)
/// the SOP instance is the same graph with s = t = p.
ReducedInstance reduce_socp_to_sop(const UndirectedGraph& g, VertexId p, std::optional<Weight> k,
                                   SplitMode mode = SplitMode::kRequire);

/// Maps an odd (p, s')-path back to an odd cycle through p.
EdgeSet lift_sop_to_socp(const ReducedInstance& reduced, const EdgeSet& path);

// Back-and-forth paths -> disjoint shortest paths.

/// Splits every vertex (t included); terminals s1 = s_out, s2 = s_in,
/// t1 = t_out, t2 = t_in; k = 2. The result is bipartite.
ReducedInstance reduce_bfp_to_disp(const Digraph& d, VertexId s, VertexId t);

/// Closes the two paths with the split edges at s and t into a weight-0
/// alternating cycle and reads off the directed cycle. Throws kInvalidWitness.
oracle::BackAndForth lift_disp_to_bfp(const Digraph& d, VertexId s, VertexId t,
                                      const ReducedInstance& reduced, const EdgeSet& first,
                                      const EdgeSet& second);

// Shortest path -> shortest odd path.

/// Adds t' and a midpoint, with zero-weight edges t-t', t-mid, mid-t'. The
/// shortest odd (s,t')-path weighs as much as the shortest (s,t)-path.
ReducedInstance reduce_sp_to_sop(const UndirectedGraph& g, VertexId s, VertexId t);

/// Drops the gadget edges from an odd (s,t')-path.
EdgeSet lift_sop_to_sp(const ReducedInstance& reduced, const EdgeSet& path);

// Odd T-joins.

/// Odd empty-join under conservative w  ->  odd T'-join under |w|.
///
/// When |E⁻| is odd a pendant vertex is attached to vertex 1 by a -1 edge.
/// The target carries |w| and T' = vertices of odd degree in E⁻. Throws
/// kNotConservative.
ReducedInstance motj_conservative_zero_to_nonneg(const UndirectedGraph& g);

/// J  ->  J Δ E⁻, restricted to original edges: an odd empty-join of the
/// source of the same optimality.
EdgeSet lift_nonneg_motj_to_zero(const ReducedInstance& reduced, const EdgeSet& join);

/// Minimum-weight odd cycle of a conservative graph; nullopt if none.
using SocOracle = std::function<std::optional<PathResult>(const UndirectedGraph&)>;
/// Minimum-weight odd cycle through a vertex; nullopt if none.
using SocpOracle = std::function<std::optional<PathResult>(const UndirectedGraph&, VertexId)>;
/// Minimum-weight odd T-join for non-negative weights; nullopt if none.
using NonnegMotjOracle =
    std::function<std::optional<TJoinResult>(const UndirectedGraph&, const TerminalSet&)>;

struct OddTJoinResult {
  EdgeSet join;
  Weight weight = 0;
  EdgeSet base;                 // F, a minimum T-join
  std::optional<EdgeSet> cycle; // C with join = F Δ C, when F was even
};

/// Minimum-weight odd T-join for arbitrary weights. F := min_tjoin(G, T); an
/// odd F is returned as is, otherwise the answer is F Δ C for a minimum odd
/// cycle C under w[F] (which is conservative), obtained from `soc`.
///
/// Throws kInfeasible (no T-join) or kInfeasibleOddJoin.
OddTJoinResult min_odd_tjoin(const UndirectedGraph& g, const TerminalSet& terminals,
                             const SocOracle& soc);

/// From a minimum odd empty-join of a conservative graph, keeps the single
/// odd cycle that carries its weight. Throws kNotEvenDegrees, kEvenParity.
EdgeSet odd_join_to_odd_cycle(const UndirectedGraph& g, const EdgeSet& join);

/// Minimum odd cycle as the best SOCp answer over all vertices. Throws
/// kInfeasible if there is no odd cycle.
PathResult soc_via_socp(const UndirectedGraph& g, const SocpOracle& socp);

/// Minimum odd cycle of a conservative graph through the chain: pendant
/// parity fix, non-negative odd T-join, J Δ E⁻, single-cycle extraction.
std::optional<PathResult> soc_via_nonneg_motj(const UndirectedGraph& g,
                                              const NonnegMotjOracle& motj);

// Instance-level entry points used by the command-line tool.

/// Applies the gadget that turns `source.kind` into `target`. Supported:
/// BFP->SOCp, BFP->DISP, SOCp->SOP, SP->SOP, MOTJ(T = ∅)->MOTJ.
ReducedInstance reduce_instance(const ProblemInstance& source, ProblemKind target);

/// Translates a target witness back to a source witness through the map.
Witness lift_witness(const ProblemInstance& source, const ReducedInstance& reduced,
                     const Witness& target_witness);

}  // namespace cgt
