#include "cgt/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cgt/error.hpp"

namespace cgt::oracle {
namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

class StepCounter {
 public:
  explicit StepCounter(SearchBudget budget) : max_(budget.max_steps) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > max_) {
      throw Error(ErrorCode::kBudgetExceeded, "search exceeded " + std::to_string(max_) + " steps");
    }
  }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t max_;
};

bool parity_ok(CycleParity parity, std::size_t length) {
  switch (parity) {
    case CycleParity::kAny: return true;
    case CycleParity::kOdd: return length % 2 == 1;
    case CycleParity::kEven: return length % 2 == 0;
  }
  return false;
}

// Depth-first enumeration of simple paths from a fixed start vertex. The
// caller's visitor decides what to do with each edge leading to the start
// (closing a cycle) or to a target.
class PathSearch {
 public:
  PathSearch(const UndirectedGraph& g, SearchBudget budget)
      : g_(g), steps_(budget), on_path_(idx(g.num_vertices()) + 1, 0) {}

  // Cycles through `start` whose other vertices all satisfy `allowed`.
  void cycles_from(VertexId start, CycleParity parity, VertexId min_vertex,
                   std::optional<PathResult>& best) {
    start_ = start;
    on_path_[idx(start)] = 1;
    cycle_dfs(start, 0, parity, min_vertex, best);
    on_path_[idx(start)] = 0;
  }

  void paths_between(VertexId s, VertexId t, std::optional<Parity> parity,
                     std::optional<PathResult>& best) {
    on_path_[idx(s)] = 1;
    path_dfs(s, t, 0, parity, best);
    on_path_[idx(s)] = 0;
  }

 private:
  void cycle_dfs(VertexId x, Weight w, CycleParity parity, VertexId min_vertex,
                 std::optional<PathResult>& best) {
    const EdgeId entered = edges_.empty() ? 0 : edges_.back();
    for (EdgeId e : g_.incident(x)) {
      steps_.tick();
      if (e == entered) continue;
      const VertexId y = g_.edge(e).other(x);
      const Weight nw = w + g_.edge(e).w;
      if (y == start_) {
        // Each cycle is seen in both directions; keep the one whose first
        // edge has the smaller id.
        if (edges_.empty() || e < edges_.front()) continue;
        if (!parity_ok(parity, edges_.size() + 1)) continue;
        if (!best || nw < best->weight) {
          EdgeSet cyc(edges_);
          cyc.insert(e);
          best = PathResult{std::move(cyc), nw};
        }
        continue;
      }
      if (on_path_[idx(y)] || y < min_vertex) continue;
      on_path_[idx(y)] = 1;
      edges_.push_back(e);
      cycle_dfs(y, nw, parity, min_vertex, best);
      edges_.pop_back();
      on_path_[idx(y)] = 0;
    }
  }

  void path_dfs(VertexId x, VertexId t, Weight w, std::optional<Parity> parity,
                std::optional<PathResult>& best) {
    for (EdgeId e : g_.incident(x)) {
      steps_.tick();
      const VertexId y = g_.edge(e).other(x);
      if (on_path_[idx(y)]) continue;
      const Weight nw = w + g_.edge(e).w;
      edges_.push_back(e);
      if (y == t) {
        const bool odd = edges_.size() % 2 == 1;
        const bool want = !parity || (*parity == Parity::kOdd) == odd;
        if (want && (!best || nw < best->weight)) best = PathResult{EdgeSet(edges_), nw};
      } else {
        on_path_[idx(y)] = 1;
        path_dfs(y, t, nw, parity, best);
        on_path_[idx(y)] = 0;
      }
      edges_.pop_back();
    }
  }

  const UndirectedGraph& g_;
  StepCounter steps_;
  std::vector<char> on_path_;
  std::vector<EdgeId> edges_;
  VertexId start_ = 0;
};

void check_vertex(const UndirectedGraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw Error(ErrorCode::kInvalidInput, "vertex " + std::to_string(v));
}

std::optional<TJoinResult> enumerate_joins(const UndirectedGraph& g, const TerminalSet& terminals,
                                           bool odd_only, SearchBudget budget) {
  const int m = g.num_edges();
  if (m > kMaxEnumerationEdges) {
    throw Error(ErrorCode::kTooLarge, std::to_string(m) + " edges exceed the enumeration bound " +
                                          std::to_string(kMaxEnumerationEdges));
  }
  for (VertexId v : terminals) check_vertex(g, v);

  // Compress the vertices that matter into bit positions.
  std::vector<int> bit(idx(g.num_vertices()) + 1, -1);
  int bits = 0;
  auto bit_of = [&](VertexId v) {
    if (bit[idx(v)] < 0) bit[idx(v)] = bits++;
    return bit[idx(v)];
  };
  std::vector<std::uint64_t> edge_mask(idx(m));
  for (const Edge& e : g.edges()) {
    edge_mask[idx(e.id - 1)] = (std::uint64_t{1} << bit_of(e.u)) ^ (std::uint64_t{1} << bit_of(e.v));
  }
  std::uint64_t target = 0;
  for (VertexId v : terminals) {
    if (bit[idx(v)] < 0) return std::nullopt;  // isolated terminal
    target |= std::uint64_t{1} << bit[idx(v)];
  }

  StepCounter steps(budget);
  std::optional<std::uint32_t> best_set;
  Weight best_w = 0;
  const std::uint32_t limit = std::uint32_t{1} << m;
  for (std::uint32_t set = 0; set < limit; ++set) {
    steps.tick();
    const int card = __builtin_popcount(set);
    if (odd_only && card % 2 == 0) continue;
    std::uint64_t odd = 0;
    Weight w = 0;
    for (int k = 0; k < m; ++k) {
      if (set >> k & 1U) {
        odd ^= edge_mask[idx(k)];
        w += g.edge(k + 1).w;
      }
    }
    if (odd != target) continue;
    if (!best_set || w < best_w) {
      best_set = set;
      best_w = w;
    }
  }
  if (!best_set) return std::nullopt;
  EdgeSet join;
  for (int k = 0; k < m; ++k) {
    if (*best_set >> k & 1U) join.insert(k + 1);
  }
  return TJoinResult{std::move(join), best_w};
}

// Simple paths from `source`, indexed by (vertex set, end vertex), with the
// minimum weight for each state.
struct SubsetPaths {
  int n = 0;
  std::vector<Weight> best;
  std::vector<EdgeId> via;  // last edge, 0 at the source state

  static constexpr Weight kNone = std::numeric_limits<Weight>::max();

  std::size_t at(std::uint32_t mask, int v) const { return idx(static_cast<int>(mask)) * idx(n) + idx(v); }
};

SubsetPaths subset_paths(const UndirectedGraph& g, VertexId source, StepCounter& steps) {
  const int n = g.num_vertices();
  SubsetPaths sp;
  sp.n = n;
  const std::size_t states = (std::size_t{1} << n) * idx(n);
  sp.best.assign(states, SubsetPaths::kNone);
  sp.via.assign(states, 0);
  const std::uint32_t start = std::uint32_t{1} << (source - 1);
  sp.best[sp.at(start, source - 1)] = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (!(mask & start)) continue;
    for (int v = 0; v < n; ++v) {
      const Weight w = sp.best[sp.at(mask, v)];
      if (w == SubsetPaths::kNone) continue;
      for (EdgeId e : g.incident(v + 1)) {
        steps.tick();
        const int y = g.edge(e).other(v + 1) - 1;
        if (mask >> y & 1U) continue;
        const std::uint32_t next = mask | (std::uint32_t{1} << y);
        Weight& slot = sp.best[sp.at(next, y)];
        if (w + g.edge(e).w < slot) {
          slot = w + g.edge(e).w;
          sp.via[sp.at(next, y)] = e;
        }
      }
    }
  }
  return sp;
}

EdgeSet trace(const UndirectedGraph& g, const SubsetPaths& sp, std::uint32_t mask, int end) {
  EdgeSet out;
  for (;;) {
    const EdgeId e = sp.via[sp.at(mask, end)];
    if (e == 0) break;
    out.insert(e);
    mask &= ~(std::uint32_t{1} << end);
    end = g.edge(e).other(end + 1) - 1;
  }
  return out;
}

}  // namespace

std::optional<PathResult> bf_min_cycle(const UndirectedGraph& g, CycleParity parity,
                                       std::optional<VertexId> through, SearchBudget budget) {
  std::optional<PathResult> best;
  PathSearch search(g, budget);
  if (through) {
    check_vertex(g, *through);
    search.cycles_from(*through, parity, 1, best);
  } else {
    for (VertexId r = 1; r <= g.num_vertices(); ++r) search.cycles_from(r, parity, r + 1, best);
  }
  return best;
}

std::optional<PathResult> bf_min_parity_path(const UndirectedGraph& g, VertexId s, VertexId t,
                                             Parity parity, SearchBudget budget) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) {
    return bf_min_cycle(g, parity == Parity::kOdd ? CycleParity::kOdd : CycleParity::kEven, s,
                        budget);
  }
  std::optional<PathResult> best;
  PathSearch(g, budget).paths_between(s, t, parity, best);
  return best;
}

std::optional<PathResult> bf_min_path(const UndirectedGraph& g, VertexId s, VertexId t,
                                      SearchBudget budget) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) return bf_min_cycle(g, CycleParity::kAny, s, budget);
  std::optional<PathResult> best;
  PathSearch(g, budget).paths_between(s, t, std::nullopt, best);
  return best;
}

std::optional<DispResult> bf_disp(const UndirectedGraph& g, VertexId s1, VertexId s2,
                                  VertexId t1, VertexId t2, std::optional<Weight> k,
                                  SearchBudget budget) {
  for (VertexId v : {s1, s2, t1, t2}) check_vertex(g, v);
  const std::vector<VertexId> terms{s1, s2, t1, t2};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i] == terms[j]) throw Error(ErrorCode::kInvalidInput, "terminals must be distinct");
    }
  }
  const int n = g.num_vertices();
  if (n > 26) throw Error(ErrorCode::kTooLarge, "subset search limited to 26 vertices");
  StepCounter steps(budget);
  // Charge the table allocation up front so oversized inputs fail fast.
  steps.tick((std::uint64_t{1} << n) * static_cast<std::uint64_t>(n));

  const SubsetPaths from1 = subset_paths(g, s1, steps);
  const SubsetPaths from2 = subset_paths(g, s2, steps);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const int ends[2] = {t1 - 1, t2 - 1};

  // below[c][M]: best s2-path ending at ends[c] whose vertex set lies inside M.
  std::vector<Weight> below[2];
  std::vector<std::uint32_t> below_arg[2];
  for (int c = 0; c < 2; ++c) {
    below[c].assign(idx(static_cast<int>(full)) + 1, SubsetPaths::kNone);
    below_arg[c].assign(idx(static_cast<int>(full)) + 1, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      below[c][mask] = from2.best[from2.at(mask, ends[c])];
      below_arg[c][mask] = mask;
    }
    for (int b = 0; b < n; ++b) {
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        steps.tick();
        if (!(mask >> b & 1U)) continue;
        const std::uint32_t sub = mask & ~(std::uint32_t{1} << b);
        if (below[c][sub] < below[c][mask] ||
            (below[c][sub] == below[c][mask] && below_arg[c][sub] < below_arg[c][mask])) {
          below[c][mask] = below[c][sub];
          below_arg[c][mask] = below_arg[c][sub];
        }
      }
    }
  }

  std::optional<DispResult> best;
  std::uint32_t best_a = 0;
  int best_c = 0;
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (int c = 0; c < 2; ++c) {
      const Weight w1 = from1.best[from1.at(a, ends[c])];
      if (w1 == SubsetPaths::kNone) continue;
      const Weight w2 = below[1 - c][full & ~a];
      if (w2 == SubsetPaths::kNone) continue;
      if (!best || w1 + w2 < best->total) {
        best = DispResult{{}, {}, w1 + w2};
        best_a = a;
        best_c = c;
      }
    }
  }
  if (!best) return std::nullopt;
  if (k && best->total > *k) return std::nullopt;
  best->first = trace(g, from1, best_a, ends[best_c]);
  best->second = trace(g, from2, below_arg[1 - best_c][full & ~best_a], ends[1 - best_c]);
  return best;
}

std::optional<TJoinResult> bf_motj(const UndirectedGraph& g, const TerminalSet& terminals,
                                   SearchBudget budget) {
  return enumerate_joins(g, terminals, true, budget);
}

std::optional<TJoinResult> bf_min_tjoin(const UndirectedGraph& g, const TerminalSet& terminals,
                                        SearchBudget budget) {
  return enumerate_joins(g, terminals, false, budget);
}

std::optional<BackAndForth> bf_bfp(const Digraph& d, VertexId s, VertexId t,
                                   SearchBudget budget) {
  if (!d.has_vertex(s) || !d.has_vertex(t) || s == t) {
    throw Error(ErrorCode::kInvalidInput, "BFP needs two distinct vertices of the digraph");
  }
  StepCounter steps(budget);
  std::vector<char> on_path(idx(d.num_vertices()) + 1, 0);
  std::vector<ArcId> arcs;
  std::optional<std::vector<ArcId>> found;
  bool t_seen = false;

  auto dfs = [&](auto&& self, VertexId x) -> void {
    for (ArcId a : d.out_arcs(x)) {
      if (found) return;
      steps.tick();
      const VertexId y = d.arc(a).head;
      if (y == s) {
        if (t_seen) {
          found = arcs;
          found->push_back(a);
          return;
        }
        continue;
      }
      if (on_path[idx(y)]) continue;
      on_path[idx(y)] = 1;
      arcs.push_back(a);
      const bool was = t_seen;
      t_seen = t_seen || y == t;
      self(self, y);
      t_seen = was;
      arcs.pop_back();
      on_path[idx(y)] = 0;
    }
  };
  on_path[idx(s)] = 1;
  dfs(dfs, s);
  if (!found) return std::nullopt;

  BackAndForth out;
  bool past_t = false;
  for (ArcId a : *found) {
    (past_t ? out.backward : out.forward).push_back(a);
    if (d.arc(a).head == t) past_t = true;
  }
  return out;
}

bool is_back_and_forth(const Digraph& d, VertexId s, VertexId t, const BackAndForth& paths) {
  if (!d.has_vertex(s) || !d.has_vertex(t) || s == t) return false;
  std::vector<int> visits(idx(d.num_vertices()) + 1, 0);
  auto walk = [&](const std::vector<ArcId>& arcs, VertexId from, VertexId to) {
    if (arcs.empty()) return false;
    VertexId cur = from;
    for (ArcId a : arcs) {
      if (!d.has_arc(a) || d.arc(a).tail != cur) return false;
      cur = d.arc(a).head;
      if (cur != to) {
        if (cur == s || cur == t) return false;
        ++visits[idx(cur)];
      }
    }
    return cur == to;
  };
  if (!walk(paths.forward, s, t) || !walk(paths.backward, t, s)) return false;
  // Inner vertices are visited at most once across both paths.
  return std::all_of(visits.begin(), visits.end(), [](int c) { return c <= 1; });
}

bool bf_has_negative_cycle(const UndirectedGraph& g, SearchBudget budget) {
  const auto best = bf_min_cycle(g, CycleParity::kAny, std::nullopt, budget);
  return best && best->weight < 0;
}

}  // namespace cgt::oracle
