#include "cgt/parity_path.hpp"

#include <string>

#include "cgt/error.hpp"
#include "cgt/matching.hpp"

namespace cgt {

PathResult shortest_parity_path_nonneg(const UndirectedGraph& g, const ParityPathQuery& q) {
  if (!g.has_vertex(q.s) || !g.has_vertex(q.t)) {
    throw Error(ErrorCode::kInvalidInput, "path endpoint out of range");
  }
  if (q.s == q.t) throw Error(ErrorCode::kInvalidInput, "s and t must differ");
  for (const Edge& e : g.edges()) {
    if (e.w < 0) throw Error(ErrorCode::kNegativeWeight, "edge " + std::to_string(e.id));
  }

  const int n = g.num_vertices();
  const bool odd = q.parity == Parity::kOdd;
  // Copy A keeps every vertex except t on even queries; copy B drops s, and t
  // on odd queries.
  auto in_a = [&](VertexId v) { return odd || v != q.t; };
  auto in_b = [&](VertexId v) { return v != q.s && (!odd || v != q.t); };

  std::vector<int> a_id(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> b_id(static_cast<std::size_t>(n) + 1, -1);
  std::vector<VertexId> owner;  // matching vertex -> graph vertex
  std::vector<char> in_copy_a;
  int count = 0;
  for (VertexId v = 1; v <= n; ++v) {
    if (in_a(v)) {
      a_id[static_cast<std::size_t>(v)] = count++;
      owner.push_back(v);
      in_copy_a.push_back(1);
    }
    if (in_b(v)) {
      b_id[static_cast<std::size_t>(v)] = count++;
      owner.push_back(v);
      in_copy_a.push_back(0);
    }
  }

  MatchingProblem problem;
  problem.n = count;
  std::vector<EdgeId> origin;  // matching edge -> graph edge, 0 for rungs
  for (const Edge& e : g.edges()) {
    const int au = a_id[static_cast<std::size_t>(e.u)];
    const int av = a_id[static_cast<std::size_t>(e.v)];
    if (au >= 0 && av >= 0) {
      problem.edges.push_back({au, av, e.w});
      origin.push_back(e.id);
    }
    const int bu = b_id[static_cast<std::size_t>(e.u)];
    const int bv = b_id[static_cast<std::size_t>(e.v)];
    if (bu >= 0 && bv >= 0) {
      problem.edges.push_back({bu, bv, e.w});
      origin.push_back(e.id);
    }
  }
  for (VertexId v = 1; v <= n; ++v) {
    const int a = a_id[static_cast<std::size_t>(v)];
    const int b = b_id[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) {
      problem.edges.push_back({a, b, 0});
      origin.push_back(0);
    }
  }

  Matching matching;
  try {
    matching = min_weight_perfect_matching(problem);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kNoPerfectMatching) throw;
    throw Error(ErrorCode::kInfeasible, std::string("no ") + (odd ? "odd" : "even") +
                                            " path between " + std::to_string(q.s) + " and " +
                                            std::to_string(q.t));
  }

  std::vector<int> matched_edge(static_cast<std::size_t>(count), -1);
  for (int k : matching.edges) {
    const auto& me = problem.edges[static_cast<std::size_t>(k)];
    matched_edge[static_cast<std::size_t>(me.u)] = k;
    matched_edge[static_cast<std::size_t>(me.v)] = k;
  }

  // Follow the alternating path from a_s: leave through the matched edge,
  // arrive at some copy of y, then continue from y's other copy.
  PathResult result;
  int cur = a_id[static_cast<std::size_t>(q.s)];
  for (;;) {
    const int k = matched_edge[static_cast<std::size_t>(cur)];
    const auto& me = problem.edges[static_cast<std::size_t>(k)];
    const EdgeId e = origin[static_cast<std::size_t>(k)];
    result.edges.insert(e);
    result.weight += g.edge(e).w;
    const int arrived = me.u == cur ? me.v : me.u;
    const VertexId y = owner[static_cast<std::size_t>(arrived)];
    if (y == q.t) break;
    cur = in_copy_a[static_cast<std::size_t>(arrived)] ? b_id[static_cast<std::size_t>(y)]
                                                       : a_id[static_cast<std::size_t>(y)];
  }
  return result;
}

}  // namespace cgt
