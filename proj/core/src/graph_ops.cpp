#include "cgt/graph_ops.hpp"

#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

#include "cgt/error.hpp"

namespace cgt {
namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// True iff the edges of `s` form one connected piece (vacuously false if empty).
bool edges_connected(const UndirectedGraph& g, const EdgeSet& s) {
  if (s.empty()) return false;
  std::vector<char> in_set(idx(g.num_edges()) + 1, 0);
  for (EdgeId e : s) in_set[idx(e)] = 1;
  std::vector<char> seen(idx(g.num_vertices()) + 1, 0);
  std::vector<VertexId> stack{g.edge(*s.begin()).u};
  seen[idx(stack.back())] = 1;
  int reached_edges = 0;
  std::vector<char> edge_seen(idx(g.num_edges()) + 1, 0);
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      if (!in_set[idx(e)]) continue;
      if (!edge_seen[idx(e)]) {
        edge_seen[idx(e)] = 1;
        ++reached_edges;
      }
      const VertexId y = g.edge(e).other(x);
      if (!seen[idx(y)]) {
        seen[idx(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  return reached_edges == s.size();
}

}  // namespace

UndirectedGraph weight_flip(const UndirectedGraph& g, const EdgeSet& flip) {
  flip.check_subset_of(g);
  UndirectedGraph out = g;
  for (EdgeId e : flip) out.set_weight(e, -g.edge(e).w);
  return out;
}

UndirectedGraph absolute_weights(const UndirectedGraph& g) {
  UndirectedGraph out = g;
  for (const Edge& e : g.edges()) out.set_weight(e.id, e.w < 0 ? -e.w : e.w);
  return out;
}

bool is_tjoin(const UndirectedGraph& g, const TerminalSet& terminals, const EdgeSet& join) {
  const auto deg = degrees(g, join);
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    const bool odd = deg[idx(v)] % 2 != 0;
    if (odd != terminals.contains(v)) return false;
  }
  // Terminals outside the vertex range can never be matched by a join.
  for (VertexId v : terminals) {
    if (!g.has_vertex(v)) return false;
  }
  return true;
}

std::vector<EdgeSet> decompose_even_subgraph(const UndirectedGraph& g, const EdgeSet& join) {
  const auto deg = degrees(g, join);
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (deg[idx(v)] % 2 != 0) {
      throw Error(ErrorCode::kOddDegreeVertex, "vertex " + std::to_string(v));
    }
  }

  std::vector<char> unused(idx(g.num_edges()) + 1, 0);
  for (EdgeId e : join) unused[idx(e)] = 1;
  // Per-vertex cursor into the (id-sorted) incidence list.
  std::vector<std::size_t> cursor(idx(g.num_vertices()) + 1, 0);
  auto next_unused = [&](VertexId x) -> EdgeId {
    auto inc = g.incident(x);
    auto& c = cursor[idx(x)];
    while (c < inc.size() && !unused[idx(inc[c])]) ++c;
    return c < inc.size() ? inc[c] : 0;
  };

  std::vector<int> pos(idx(g.num_vertices()) + 1, -1);
  std::vector<EdgeSet> cycles;
  for (EdgeId first : join) {
    if (!unused[idx(first)]) continue;
    const VertexId start = g.edge(first).u;
    std::vector<VertexId> walk{start};
    std::vector<EdgeId> walk_edges;
    pos[idx(start)] = 0;
    VertexId cur = start;
    for (;;) {
      const EdgeId e = next_unused(cur);
      if (e == 0) {
        if (!walk_edges.empty()) throw std::logic_error("walk stuck at an even-degree vertex");
        break;
      }
      unused[idx(e)] = 0;
      const VertexId y = g.edge(e).other(cur);
      if (pos[idx(y)] >= 0) {
        const auto k = static_cast<std::size_t>(pos[idx(y)]);
        std::vector<EdgeId> cyc(walk_edges.begin() + static_cast<std::ptrdiff_t>(k),
                                walk_edges.end());
        cyc.push_back(e);
        cycles.emplace_back(std::move(cyc));
        for (std::size_t i = k + 1; i < walk.size(); ++i) pos[idx(walk[i])] = -1;
        walk.resize(k + 1);
        walk_edges.resize(k);
      } else {
        pos[idx(y)] = static_cast<int>(walk.size());
        walk.push_back(y);
        walk_edges.push_back(e);
      }
      cur = y;
    }
    pos[idx(start)] = -1;
  }
  return cycles;
}

bool is_cycle(const UndirectedGraph& g, const EdgeSet& c) {
  for (EdgeId e : c) {
    if (!g.has_edge(e)) return false;
  }
  if (c.empty()) return false;
  const auto deg = degrees(g, c);
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (deg[idx(v)] != 0 && deg[idx(v)] != 2) return false;
  }
  return edges_connected(g, c);
}

bool is_path(const UndirectedGraph& g, const EdgeSet& p, VertexId s, VertexId t) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) return false;
  for (EdgeId e : p) {
    if (!g.has_edge(e)) return false;
  }
  if (s == t) return is_cycle(g, p) && degrees(g, p)[idx(s)] == 2;
  if (p.empty()) return false;
  const auto deg = degrees(g, p);
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    const int d = deg[idx(v)];
    if (v == s || v == t) {
      if (d != 1) return false;
    } else if (d != 0 && d != 2) {
      return false;
    }
  }
  return edges_connected(g, p);
}

bool is_bipartite(const UndirectedGraph& g) {
  std::vector<int> color(idx(g.num_vertices()) + 1, -1);
  for (VertexId r = 1; r <= g.num_vertices(); ++r) {
    if (color[idx(r)] >= 0) continue;
    color[idx(r)] = 0;
    std::queue<VertexId> q;
    q.push(r);
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (color[idx(y)] < 0) {
          color[idx(y)] = 1 - color[idx(x)];
          q.push(y);
        } else if (color[idx(y)] == color[idx(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool negatives_form_matching(const UndirectedGraph& g) {
  std::vector<char> covered(idx(g.num_vertices()) + 1, 0);
  for (const Edge& e : g.edges()) {
    if (e.w >= 0) continue;
    if (covered[idx(e.u)] || covered[idx(e.v)]) return false;
    covered[idx(e.u)] = covered[idx(e.v)] = 1;
  }
  return true;
}

std::vector<int> connected_components(const UndirectedGraph& g) {
  std::vector<int> comp(idx(g.num_vertices()) + 1, -1);
  int next = 0;
  for (VertexId r = 1; r <= g.num_vertices(); ++r) {
    if (comp[idx(r)] >= 0) continue;
    comp[idx(r)] = next;
    std::vector<VertexId> stack{r};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(x)) {
        const VertexId y = g.edge(e).other(x);
        if (comp[idx(y)] < 0) {
          comp[idx(y)] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::optional<std::vector<VertexId>> path_vertices(const UndirectedGraph& g, const EdgeSet& p,
                                                    VertexId from) {
  if (p.empty() || !g.has_vertex(from)) return std::nullopt;
  std::vector<char> left(idx(g.num_edges()) + 1, 0);
  for (EdgeId e : p) {
    if (!g.has_edge(e)) return std::nullopt;
    left[idx(e)] = 1;
  }
  std::vector<VertexId> order{from};
  VertexId cur = from;
  int consumed = 0;
  for (;;) {
    EdgeId step = 0;
    for (EdgeId e : g.incident(cur)) {
      if (left[idx(e)]) {
        step = e;
        break;
      }
    }
    if (step == 0) break;
    left[idx(step)] = 0;
    ++consumed;
    cur = g.edge(step).other(cur);
    order.push_back(cur);
    if (cur == from) break;
  }
  if (consumed != p.size()) return std::nullopt;
  return order;
}

}  // namespace cgt
