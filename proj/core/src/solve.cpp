#include "cgt/solve.hpp"

#include <algorithm>

#include "cgt/error.hpp"
#include "cgt/parity_path.hpp"
#include "cgt/reductions.hpp"
#include "cgt/tjoin.hpp"

namespace cgt {
namespace {

std::vector<int> ids(const EdgeSet& s) { return {s.begin(), s.end()}; }

SolveOutcome from_path(const std::optional<PathResult>& r) {
  if (!r) return {};
  return {SolveStatus::kSolved, r->weight, Witness{ids(r->edges), {}, false}};
}

void require_conservative(const UndirectedGraph& g) {
  if (!is_conservative(g)) {
    throw Error(ErrorCode::kNotConservative, "the problem is defined for conservative weights");
  }
}

bool nonnegative(const UndirectedGraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.w >= 0; });
}

SolveOutcome solve_default(const ProblemInstance& inst, oracle::SearchBudget budget) {
  const auto& g = inst.graph;
  switch (*inst.kind) {
    case ProblemKind::kSP:
      try {
        const auto r = shortest_path_conservative(g, inst.require_role("s"), inst.require_role("t"));
        return from_path(r);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInfeasible) return {};
        throw;
      }
    case ProblemKind::kSOP: {
      const VertexId s = inst.require_role("s");
      const VertexId t = inst.require_role("t");
      if (s != t && nonnegative(g)) {
        try {
          return from_path(shortest_parity_path_nonneg(g, {s, t, Parity::kOdd}));
        } catch (const Error& e) {
          if (e.code() == ErrorCode::kInfeasible) return {};
          throw;
        }
      }
      require_conservative(g);
      return from_path(oracle::bf_min_odd_path(g, s, t, budget));
    }
    case ProblemKind::kSOC:
      require_conservative(g);
      return from_path(oracle::bf_min_cycle(g, oracle::CycleParity::kOdd, std::nullopt, budget));
    case ProblemKind::kSOCp:
      require_conservative(g);
      return from_path(
          oracle::bf_min_cycle(g, oracle::CycleParity::kOdd, inst.require_role("p"), budget));
    case ProblemKind::kDISP:
      require_conservative(g);
      break;
    case ProblemKind::kMOTJ: {
      const SocOracle soc = [budget](const UndirectedGraph& h) {
        return oracle::bf_min_cycle(h, oracle::CycleParity::kOdd, std::nullopt, budget);
      };
      try {
        const auto r = min_odd_tjoin(g, inst.terminals, soc);
        return {SolveStatus::kSolved, r.weight, Witness{ids(r.join), {}, false}};
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInfeasible || e.code() == ErrorCode::kInfeasibleOddJoin) {
          return {};
        }
        throw;
      }
    }
    case ProblemKind::kBFP:
      break;
  }
  return {};
}

SolveOutcome solve_oracle(const ProblemInstance& inst, oracle::SearchBudget budget) {
  const auto& g = inst.graph;
  switch (*inst.kind) {
    case ProblemKind::kSP:
      return from_path(
          oracle::bf_min_path(g, inst.require_role("s"), inst.require_role("t"), budget));
    case ProblemKind::kSOP:
      return from_path(
          oracle::bf_min_odd_path(g, inst.require_role("s"), inst.require_role("t"), budget));
    case ProblemKind::kSOC:
      return from_path(oracle::bf_min_cycle(g, oracle::CycleParity::kOdd, std::nullopt, budget));
    case ProblemKind::kSOCp:
      return from_path(
          oracle::bf_min_cycle(g, oracle::CycleParity::kOdd, inst.require_role("p"), budget));
    case ProblemKind::kMOTJ: {
      const auto r = oracle::bf_motj(g, inst.terminals, budget);
      if (!r) return {};
      return {SolveStatus::kSolved, r->weight, Witness{ids(r->join), {}, false}};
    }
    case ProblemKind::kDISP:
    case ProblemKind::kBFP:
      break;
  }
  return {};
}

}  // namespace

SolveOutcome solve_instance(const ProblemInstance& inst, Engine engine,
                            oracle::SearchBudget budget) {
  if (!inst.kind) throw Error(ErrorCode::kInvalidInput, "instance has no problem kind ('q' line)");
  for (auto role : required_roles(*inst.kind)) inst.require_role(role);

  SolveOutcome out;
  if (*inst.kind == ProblemKind::kBFP) {
    const auto r = oracle::bf_bfp(inst.digraph, inst.require_role("s"), inst.require_role("t"),
                                  budget);
    if (!r) return {};
    return {SolveStatus::kSolved, 0, Witness{r->forward, r->backward, true}};
  }
  if (*inst.kind == ProblemKind::kDISP) {
    if (engine == Engine::kDefault) solve_default(inst, budget);  // conservativeness gate
    const auto r = oracle::bf_disp(inst.graph, inst.require_role("s1"), inst.require_role("s2"),
                                   inst.require_role("t1"), inst.require_role("t2"), std::nullopt,
                                   budget);
    if (!r) return {};
    out = {SolveStatus::kSolved, r->total, Witness{ids(r->first), ids(r->second), true}};
  } else {
    out = engine == Engine::kOracle ? solve_oracle(inst, budget) : solve_default(inst, budget);
  }
  if (out.status == SolveStatus::kSolved && inst.bound && out.weight > *inst.bound) {
    out.status = SolveStatus::kOverBound;
  }
  return out;
}

}  // namespace cgt
