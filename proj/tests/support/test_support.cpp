#include "test_support.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cgt/graph_ops.hpp"

namespace cgt::testing {

UndirectedGraph make_graph(int n, const std::vector<EdgeSpec>& edges) {
  UndirectedGraph g(n);
  for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
  return g;
}

Digraph make_digraph(int n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  Digraph d(n);
  for (const auto& [u, v] : arcs) d.add_arc(u, v);
  return d;
}

UndirectedGraph random_graph(Rng& rng, int n, int m, Weight lo, Weight hi) {
  const int max_simple = n * (n - 1) / 2;
  UndirectedGraph g = random_topology(n, std::min(m, max_simple), rng);
  for (const Edge& e : std::vector<Edge>(g.edges().begin(), g.edges().end())) {
    g.set_weight(e.id, rng.uniform(lo, hi));
  }
  return g;
}

TerminalSet random_feasible_terminals(const UndirectedGraph& g, Rng& rng,
                                      std::optional<int> max_size) {
  const auto comp = connected_components(g);
  std::vector<VertexId> picks;
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (rng.coin()) picks.push_back(v);
  }
  // Shuffle, truncate, then fix parity per component.
  for (std::size_t i = picks.size(); i > 1; --i) {
    std::swap(picks[i - 1], picks[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }
  if (max_size && static_cast<int>(picks.size()) > *max_size) picks.resize(static_cast<std::size_t>(*max_size));
  std::vector<int> count(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (VertexId v : picks) ++count[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
  std::vector<VertexId> kept;
  for (VertexId v : picks) {
    int& c = count[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    if (c % 2 == 1) {
      c = 0;
      continue;
    }
    kept.push_back(v);
  }
  return TerminalSet(std::move(kept));
}

EdgeSet random_edge_subset(const UndirectedGraph& g, Rng& rng) {
  EdgeSet s;
  for (const Edge& e : g.edges()) {
    if (rng.coin()) s.insert(e.id);
  }
  return s;
}

Digraph random_digraph(Rng& rng, int n, int m) {
  Digraph d(n);
  std::set<std::pair<VertexId, VertexId>> used;
  const int max_arcs = n * (n - 1);
  while (d.num_arcs() < std::min(m, max_arcs)) {
    const auto u = static_cast<VertexId>(rng.uniform(1, n));
    const auto v = static_cast<VertexId>(rng.uniform(1, n));
    if (u == v || !used.insert({u, v}).second) continue;
    d.add_arc(u, v);
  }
  return d;
}

std::optional<Weight> brute_min_perfect_matching(const MatchingProblem& p) {
  std::vector<bool> covered(static_cast<std::size_t>(p.n), false);
  std::function<std::optional<Weight>()> go = [&]() -> std::optional<Weight> {
    int first = -1;
    for (int v = 0; v < p.n; ++v) {
      if (!covered[static_cast<std::size_t>(v)]) {
        first = v;
        break;
      }
    }
    if (first < 0) return Weight{0};
    std::optional<Weight> best;
    covered[static_cast<std::size_t>(first)] = true;
    for (const auto& e : p.edges) {
      int other = -1;
      if (e.u == first) other = e.v;
      if (e.v == first) other = e.u;
      if (other < 0 || other == first || covered[static_cast<std::size_t>(other)]) continue;
      covered[static_cast<std::size_t>(other)] = true;
      if (auto rest = go()) {
        if (!best || *rest + e.w < *best) best = *rest + e.w;
      }
      covered[static_cast<std::size_t>(other)] = false;
    }
    covered[static_cast<std::size_t>(first)] = false;
    return best;
  };
  return go();
}

int brute_max_matching_size(const MatchingProblem& p) {
  std::vector<bool> covered(static_cast<std::size_t>(p.n), false);
  std::function<int(int)> go = [&](int from) -> int {
    int v = from;
    while (v < p.n && covered[static_cast<std::size_t>(v)]) ++v;
    if (v >= p.n) return 0;
    covered[static_cast<std::size_t>(v)] = true;
    int best = go(v + 1);  // leave v exposed
    for (const auto& e : p.edges) {
      int other = -1;
      if (e.u == v) other = e.v;
      if (e.v == v) other = e.u;
      if (other < 0 || other == v || covered[static_cast<std::size_t>(other)]) continue;
      covered[static_cast<std::size_t>(other)] = true;
      best = std::max(best, 1 + go(v + 1));
      covered[static_cast<std::size_t>(other)] = false;
    }
    covered[static_cast<std::size_t>(v)] = false;
    return best;
  };
  return go(0);
}

}  // namespace cgt::testing
