#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/edge_set.hpp"
#include "cgt/graph.hpp"
#include "cgt/parity_path.hpp"
#include "cgt/tjoin.hpp"

// Exhaustive exact solvers. They are exponential by nature and exist to
// certify the polynomial algorithms and the reductions on small instances.
// Every search runs against a step budget; running out throws
// kBudgetExceeded instead of returning a partial answer. Enumeration follows
// edge ids, so equal inputs always give equal witnesses.
namespace cgt::oracle {

inline constexpr std::uint64_t kDefaultBudgetSteps = 10'000'000;

struct SearchBudget {
  std::uint64_t max_steps = kDefaultBudgetSteps;
};

enum class CycleParity { kAny, kOdd, kEven };

/// Minimum-weight simple cycle with the given edge-count parity, optionally
/// required to pass through `through`. nullopt when no such cycle exists.
std::optional<PathResult> bf_min_cycle(const UndirectedGraph& g, CycleParity parity,
                                       std::optional<VertexId> through = std::nullopt,
                                       SearchBudget budget = {});

/// Minimum-weight simple (s,t)-path with the given parity. s == t is routed
/// to bf_min_cycle through s.
std::optional<PathResult> bf_min_parity_path(const UndirectedGraph& g, VertexId s, VertexId t,
                                             Parity parity, SearchBudget budget = {});

inline std::optional<PathResult> bf_min_odd_path(const UndirectedGraph& g, VertexId s,
                                                 VertexId t, SearchBudget budget = {}) {
  return bf_min_parity_path(g, s, t, Parity::kOdd, budget);
}

/// Minimum-weight simple (s,t)-path of any parity.
std::optional<PathResult> bf_min_path(const UndirectedGraph& g, VertexId s, VertexId t,
                                      SearchBudget budget = {});

struct DispResult {
  EdgeSet first;   // path starting at s1
  EdgeSet second;  // path starting at s2
  Weight total = 0;
};

/// Two vertex-disjoint paths, one from s1 and one from s2, ending at t1 and
/// t2 in either assignment, of minimum total weight. Exact dynamic program
/// over vertex subsets. Returns nullopt if no pair exists or if the optimum
/// exceeds `k` when a bound is given.
std::optional<DispResult> bf_disp(const UndirectedGraph& g, VertexId s1, VertexId s2,
                                  VertexId t1, VertexId t2,
                                  std::optional<Weight> k = std::nullopt,
                                  SearchBudget budget = {});

inline constexpr int kMaxEnumerationEdges = 20;

/// Minimum-weight odd T-join by enumerating all 2^m edge subsets (m ≤ 20,
/// else kTooLarge).
std::optional<TJoinResult> bf_motj(const UndirectedGraph& g, const TerminalSet& terminals,
                                   SearchBudget budget = {});

/// Minimum-weight T-join of any parity by subset enumeration (m ≤ 20).
std::optional<TJoinResult> bf_min_tjoin(const UndirectedGraph& g, const TerminalSet& terminals,
                                        SearchBudget budget = {});

struct BackAndForth {
  std::vector<ArcId> forward;   // s -> t
  std::vector<ArcId> backward;  // t -> s
};

/// Openly disjoint directed s->t and t->s paths, found as a directed simple
/// cycle through s that visits t.
std::optional<BackAndForth> bf_bfp(const Digraph& d, VertexId s, VertexId t,
                                   SearchBudget budget = {});

/// True iff the two arc sequences are directed s->t and t->s paths sharing
/// no vertex besides s and t.
bool is_back_and_forth(const Digraph& d, VertexId s, VertexId t, const BackAndForth& paths);

/// True iff some cycle has negative weight, by exhaustive cycle search.
bool bf_has_negative_cycle(const UndirectedGraph& g, SearchBudget budget = {});

}  // namespace cgt::oracle
