#include "cgt/tjoin.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "cgt/error.hpp"
#include "cgt/graph_ops.hpp"
#include "cgt/matching.hpp"

namespace cgt {
namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

constexpr Weight kUnreached = std::numeric_limits<Weight>::max();

struct ShortestPathTree {
  std::vector<Weight> dist;
  std::vector<EdgeId> parent;  // 0 at the root and at unreached vertices
};

// Label-setting shortest paths from `source`; among equal-distance parents the
// lowest edge id wins.
ShortestPathTree dijkstra(const UndirectedGraph& g, VertexId source) {
  ShortestPathTree tree{std::vector<Weight>(idx(g.num_vertices()) + 1, kUnreached),
                        std::vector<EdgeId>(idx(g.num_vertices()) + 1, 0)};
  std::vector<char> done(idx(g.num_vertices()) + 1, 0);
  using Item = std::pair<Weight, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  tree.dist[idx(source)] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (done[idx(x)] || d != tree.dist[idx(x)]) continue;
    done[idx(x)] = 1;
    for (EdgeId e : g.incident(x)) {
      const VertexId y = g.edge(e).other(x);
      if (done[idx(y)]) continue;
      const Weight nd = d + g.edge(e).w;
      Weight& dy = tree.dist[idx(y)];
      if (nd < dy) {
        dy = nd;
        tree.parent[idx(y)] = e;
        heap.emplace(nd, y);
      } else if (nd == dy && e < tree.parent[idx(y)]) {
        tree.parent[idx(y)] = e;
      }
    }
  }
  return tree;
}

void check_terminals(const UndirectedGraph& g, const TerminalSet& terminals) {
  for (VertexId v : terminals) {
    if (!g.has_vertex(v)) throw Error(ErrorCode::kInvalidInput, "terminal " + std::to_string(v));
  }
  if (terminals.size() % 2 != 0) {
    throw Error(ErrorCode::kOddTerminalCount, std::to_string(terminals.size()) + " terminals");
  }
}

void check_component_parity(const UndirectedGraph& g, const TerminalSet& terminals) {
  const auto comp = connected_components(g);
  std::vector<int> count;
  for (VertexId v : terminals) {
    const auto c = idx(comp[idx(v)]);
    if (count.size() <= c) count.resize(c + 1, 0);
    ++count[c];
  }
  for (std::size_t c = 0; c < count.size(); ++c) {
    if (count[c] % 2 != 0) {
      throw Error(ErrorCode::kInfeasible,
                  "a connected component contains an odd number of terminals");
    }
  }
}

}  // namespace

TJoinResult min_tjoin_nonneg(const UndirectedGraph& g, const TerminalSet& terminals) {
  for (const Edge& e : g.edges()) {
    if (e.w < 0) throw Error(ErrorCode::kNegativeWeight, "edge " + std::to_string(e.id));
  }
  check_terminals(g, terminals);
  check_component_parity(g, terminals);
  if (terminals.empty()) return {};

  const std::vector<VertexId> ts(terminals.begin(), terminals.end());
  std::vector<ShortestPathTree> trees;
  trees.reserve(ts.size());
  for (VertexId t : ts) trees.push_back(dijkstra(g, t));

  MatchingProblem problem;
  problem.n = static_cast<int>(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      const Weight d = trees[i].dist[idx(ts[j])];
      if (d != kUnreached) {
        problem.edges.push_back({static_cast<int>(i), static_cast<int>(j), d});
      }
    }
  }
  const Matching matching = min_weight_perfect_matching(problem);

  EdgeSet join;
  for (int k : matching.edges) {
    const auto& me = problem.edges[idx(k)];
    const auto& tree = trees[idx(me.u)];
    for (VertexId x = ts[idx(me.v)]; x != ts[idx(me.u)];) {
      const EdgeId e = tree.parent[idx(x)];
      join.toggle(e);
      x = g.edge(e).other(x);
    }
  }
  return {join, weight(g, join)};
}

TJoinResult min_tjoin(const UndirectedGraph& g, const TerminalSet& terminals) {
  check_terminals(g, terminals);
  const EdgeSet negatives = negative_edges(g);
  const TerminalSet shifted = terminals.symmetric_difference(TerminalSet(odd_vertices(g, negatives)));
  const TJoinResult nonneg = min_tjoin_nonneg(absolute_weights(g), shifted);
  EdgeSet join = nonneg.join.symmetric_difference(negatives);
  const Weight w = weight(g, join);
  return {std::move(join), w};
}

bool is_conservative(const UndirectedGraph& g) {
  const EdgeSet negatives = negative_edges(g);
  if (negatives.empty()) return true;
  const UndirectedGraph abs_g = absolute_weights(g);
  const TerminalSet odd(odd_vertices(g, negatives));
  return min_tjoin_nonneg(abs_g, odd).weight == weight(abs_g, negatives);
}

PathResult shortest_path_conservative(const UndirectedGraph& g, VertexId s, VertexId t) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw Error(ErrorCode::kInvalidInput, "path endpoint out of range");
  }
  if (s == t) throw Error(ErrorCode::kInvalidInput, "s and t must differ");
  if (!is_conservative(g)) throw Error(ErrorCode::kNotConservative, "graph has a negative cycle");
  const TerminalSet ends{s, t};
  const TJoinResult best = min_tjoin(g, ends);
  EdgeSet path = peel_minimal_join(g, ends, best.join);
  const Weight w = weight(g, path);
  return {std::move(path), w};
}

EdgeSet peel_minimal_join(const UndirectedGraph& g, const TerminalSet& terminals,
                          const EdgeSet& join) {
  join.check_subset_of(g);
  if (!is_tjoin(g, terminals, join)) throw Error(ErrorCode::kNotATJoin, "input is not a T-join");

  EdgeSet current = join;
  for (;;) {
    // Grow a forest in edge-id order; the first edge closing a cycle together
    // with the forest path between its endpoints is the cycle to delete.
    std::vector<int> root(idx(g.num_vertices()) + 1);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&root](int x) {
      while (root[idx(x)] != x) {
        root[idx(x)] = root[idx(root[idx(x)])];
        x = root[idx(x)];
      }
      return x;
    };
    std::vector<std::vector<EdgeId>> forest(idx(g.num_vertices()) + 1);
    EdgeSet cycle;
    for (EdgeId e : current) {
      const auto& edge = g.edge(e);
      const int a = find(edge.u);
      const int b = find(edge.v);
      if (a != b) {
        root[idx(a)] = b;
        forest[idx(edge.u)].push_back(e);
        forest[idx(edge.v)].push_back(e);
        continue;
      }
      std::vector<EdgeId> via(idx(g.num_vertices()) + 1, 0);
      std::vector<char> seen(idx(g.num_vertices()) + 1, 0);
      std::queue<VertexId> q;
      q.push(edge.u);
      seen[idx(edge.u)] = 1;
      while (!q.empty() && !seen[idx(edge.v)]) {
        const VertexId x = q.front();
        q.pop();
        for (EdgeId f : forest[idx(x)]) {
          const VertexId y = g.edge(f).other(x);
          if (!seen[idx(y)]) {
            seen[idx(y)] = 1;
            via[idx(y)] = f;
            q.push(y);
          }
        }
      }
      cycle.insert(e);
      for (VertexId x = edge.v; x != edge.u; x = g.edge(via[idx(x)]).other(x)) {
        cycle.insert(via[idx(x)]);
      }
      break;
    }
    if (cycle.empty()) return current;
    if (weight(g, cycle) < 0) {
      throw Error(ErrorCode::kNotConservative, "join contains a negative cycle");
    }
    current = current.difference(cycle);
  }
}

}  // namespace cgt
