#include "cgt/reductions.hpp"

#include <algorithm>
#include <string>

#include "cgt/error.hpp"
#include "cgt/graph_ops.hpp"

namespace cgt {
namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

[[noreturn]] void invalid_witness(const std::string& why) {
  throw Error(ErrorCode::kInvalidWitness, why);
}

void check_bfp_terminals(const Digraph& d, VertexId s, VertexId t) {
  if (!d.has_vertex(s) || !d.has_vertex(t)) {
    throw Error(ErrorCode::kInvalidInput, "BFP terminal out of range");
  }
  if (s == t) throw Error(ErrorCode::kInvalidInput, "BFP needs s != t");
}

MapEntry entry(char sk, int sid, char tk, int tid, std::string tag = {}) {
  return MapEntry{ElementRef{sk, sid}, ElementRef{tk, tid}, std::move(tag)};
}

// Arcs of the source digraph that the given target edges stand for.
std::vector<ArcId> arcs_of(const WitnessMap& map, const EdgeSet& edges) {
  std::vector<ArcId> arcs;
  for (EdgeId e : edges) {
    const auto src = map.source_of({'e', e});
    if (src && src->kind == 'a') arcs.push_back(src->id);
  }
  return arcs;
}

// Orders an arc set forming one directed cycle through s and t into the
// s->t and t->s halves.
oracle::BackAndForth split_directed_cycle(const Digraph& d, VertexId s, VertexId t,
                                          const std::vector<ArcId>& arcs) {
  std::vector<ArcId> next(idx(d.num_vertices()) + 1, 0);
  for (ArcId a : arcs) {
    if (!d.has_arc(a)) invalid_witness("arc " + std::to_string(a) + " not in digraph");
    auto& slot = next[idx(d.arc(a).tail)];
    if (slot != 0) invalid_witness("two arcs leave vertex " + std::to_string(d.arc(a).tail));
    slot = a;
  }
  oracle::BackAndForth out;
  VertexId cur = s;
  bool past_t = false;
  std::size_t used = 0;
  do {
    const ArcId a = next[idx(cur)];
    if (a == 0) invalid_witness("arcs do not close a directed cycle through s");
    (past_t ? out.backward : out.forward).push_back(a);
    ++used;
    cur = d.arc(a).head;
    if (cur == t) past_t = true;
    if (used > arcs.size()) invalid_witness("arcs do not form a single cycle");
  } while (cur != s);
  if (used != arcs.size()) invalid_witness("arcs form more than one cycle");
  if (!past_t) invalid_witness("directed cycle misses t");
  if (!oracle::is_back_and_forth(d, s, t, out)) invalid_witness("paths are not openly disjoint");
  return out;
}

ProblemInstance undirected_instance(ProblemKind kind, UndirectedGraph g) {
  ProblemInstance inst;
  inst.kind = kind;
  inst.directed = false;
  inst.graph = std::move(g);
  return inst;
}

void require_kind(const ProblemInstance& inst, ProblemKind kind) {
  if (inst.kind != kind) {
    throw Error(ErrorCode::kInvalidInput,
                "expected a " + std::string(to_string(kind)) + " instance");
  }
}

}  // namespace

std::string_view to_string(Gadget gadget) {
  switch (gadget) {
    case Gadget::kBfpToSocp: return "bfp-socp";
    case Gadget::kSocpToSop: return "socp-sop";
    case Gadget::kBfpToDisp: return "bfp-disp";
    case Gadget::kSpToSop: return "sp-sop";
    case Gadget::kMotjZeroToNonneg: return "motj0-motj";
  }
  return "?";
}

std::optional<Gadget> parse_gadget(std::string_view token) {
  for (Gadget g : {Gadget::kBfpToSocp, Gadget::kSocpToSop, Gadget::kBfpToDisp, Gadget::kSpToSop,
                   Gadget::kMotjZeroToNonneg}) {
    if (to_string(g) == token) return g;
  }
  return std::nullopt;
}

std::optional<ElementRef> WitnessMap::source_of(ElementRef target) const {
  for (const auto& e : entries) {
    if (e.target == target) {
      if (e.source.kind == '-') return std::nullopt;
      return e.source;
    }
  }
  return std::nullopt;
}

std::vector<MapEntry> WitnessMap::entries_for_source(ElementRef source) const {
  std::vector<MapEntry> out;
  for (const auto& e : entries) {
    if (e.source == source) out.push_back(e);
  }
  return out;
}

ReducedInstance reduce_bfp_to_socp(const Digraph& d, VertexId s, VertexId t) {
  check_bfp_terminals(d, s, t);
  const int n = d.num_vertices();
  std::vector<VertexId> out(idx(n) + 1, 0);
  std::vector<VertexId> in(idx(n) + 1, 0);
  int count = 0;
  WitnessMap map{Gadget::kBfpToSocp, {}};
  for (VertexId v = 1; v <= n; ++v) {
    if (v == t) {
      out[idx(v)] = in[idx(v)] = ++count;
      map.entries.push_back(entry('v', v, 'v', count));
    } else {
      out[idx(v)] = ++count;
      in[idx(v)] = ++count;
      map.entries.push_back(entry('v', v, 'v', out[idx(v)], "out"));
      map.entries.push_back(entry('v', v, 'v', in[idx(v)], "in"));
    }
  }
  UndirectedGraph g(count);
  for (const Arc& a : d.arcs()) {
    const EdgeId e = g.add_edge(out[idx(a.tail)], in[idx(a.head)], 1);
    map.entries.push_back(entry('a', a.id, 'e', e));
  }
  for (VertexId v = 1; v <= n; ++v) {
    if (v == t) continue;
    const EdgeId e = g.add_edge(out[idx(v)], in[idx(v)], -1);
    map.entries.push_back(entry('v', v, 'e', e, "split"));
  }
  ReducedInstance r{undirected_instance(ProblemKind::kSOCp, std::move(g)), std::move(map)};
  r.instance.roles["p"] = out[idx(s)];
  r.instance.bound = 1;
  return r;
}

oracle::BackAndForth lift_socp_to_bfp(const Digraph& d, VertexId s, VertexId t,
                                      const ReducedInstance& reduced, const EdgeSet& cycle) {
  check_bfp_terminals(d, s, t);
  const auto& g = reduced.instance.graph;
  const VertexId p = reduced.instance.require_role("p");
  for (EdgeId e : cycle) {
    if (!g.has_edge(e)) invalid_witness("edge " + std::to_string(e) + " not in reduced graph");
  }
  if (!is_cycle(g, cycle)) invalid_witness("not a cycle");
  if (!cycle.is_odd()) invalid_witness("cycle is even");
  if (degrees(g, cycle)[idx(p)] != 2) invalid_witness("cycle misses p");
  if (weight(g, cycle) > reduced.instance.bound.value_or(1)) {
    invalid_witness("cycle weight exceeds the bound");
  }
  return split_directed_cycle(d, s, t, arcs_of(reduced.map, cycle));
}

ReducedInstance reduce_socp_to_sop(const UndirectedGraph& g, VertexId p, std::optional<Weight> k,
                                   SplitMode mode) {
  if (!g.has_vertex(p)) throw Error(ErrorCode::kInvalidInput, "p out of range");
  EdgeId split = 0;
  for (EdgeId e : g.incident(p)) {
    if (g.edge(e).w < 0) {
      split = e;
      break;
    }
  }
  if (split == 0 && mode == SplitMode::kRequire) {
    throw Error(ErrorCode::kMissingSplitEdge, "no negative edge at p = " + std::to_string(p));
  }

  WitnessMap map{Gadget::kSocpToSop, {}};
  for (VertexId v = 1; v <= g.num_vertices(); ++v) map.entries.push_back(entry('v', v, 'v', v));

  UndirectedGraph h(g.num_vertices());
  VertexId end = p;
  if (split != 0) {
    end = h.add_vertex();
    map.entries.push_back(entry('-', 0, 'v', end, "sprime"));
  }
  for (const Edge& e : g.edges()) {
    if (e.id == split) {
      h.add_edge(end, e.other(p), e.w);
      map.entries.push_back(entry('e', e.id, 'e', e.id, "split"));
    } else {
      h.add_edge(e.u, e.v, e.w);
      map.entries.push_back(entry('e', e.id, 'e', e.id));
    }
  }
  ReducedInstance r{undirected_instance(ProblemKind::kSOP, std::move(h)), std::move(map)};
  r.instance.roles["s"] = p;
  r.instance.roles["t"] = end;
  r.instance.bound = k;
  return r;
}

EdgeSet lift_sop_to_socp(const ReducedInstance& reduced, const EdgeSet& path) {
  const auto& h = reduced.instance.graph;
  const VertexId s = reduced.instance.require_role("s");
  const VertexId t = reduced.instance.require_role("t");
  for (EdgeId e : path) {
    if (!h.has_edge(e)) invalid_witness("edge " + std::to_string(e) + " not in reduced graph");
  }
  if (!is_path(h, path, s, t)) invalid_witness("not an (s,t)-path");
  if (!path.is_odd()) invalid_witness("path is even");
  EdgeSet lifted;
  for (EdgeId e : path) {
    const auto src = reduced.map.source_of({'e', e});
    if (!src || src->kind != 'e') invalid_witness("edge without source counterpart");
    lifted.insert(src->id);
  }
  return lifted;
}

ReducedInstance reduce_bfp_to_disp(const Digraph& d, VertexId s, VertexId t) {
  check_bfp_terminals(d, s, t);
  const int n = d.num_vertices();
  auto out = [](VertexId v) { return 2 * v - 1; };
  auto in = [](VertexId v) { return 2 * v; };
  WitnessMap map{Gadget::kBfpToDisp, {}};
  for (VertexId v = 1; v <= n; ++v) {
    map.entries.push_back(entry('v', v, 'v', out(v), "out"));
    map.entries.push_back(entry('v', v, 'v', in(v), "in"));
  }
  UndirectedGraph g(2 * n);
  for (const Arc& a : d.arcs()) {
    const EdgeId e = g.add_edge(out(a.tail), in(a.head), 1);
    map.entries.push_back(entry('a', a.id, 'e', e));
  }
  for (VertexId v = 1; v <= n; ++v) {
    const EdgeId e = g.add_edge(out(v), in(v), -1);
    map.entries.push_back(entry('v', v, 'e', e, "split"));
  }
  ReducedInstance r{undirected_instance(ProblemKind::kDISP, std::move(g)), std::move(map)};
  r.instance.roles["s1"] = out(s);
  r.instance.roles["s2"] = in(s);
  r.instance.roles["t1"] = out(t);
  r.instance.roles["t2"] = in(t);
  r.instance.bound = 2;
  return r;
}

oracle::BackAndForth lift_disp_to_bfp(const Digraph& d, VertexId s, VertexId t,
                                      const ReducedInstance& reduced, const EdgeSet& first,
                                      const EdgeSet& second) {
  check_bfp_terminals(d, s, t);
  const auto& g = reduced.instance.graph;
  for (const EdgeSet* part : {&first, &second}) {
    for (EdgeId e : *part) {
      if (!g.has_edge(e)) invalid_witness("edge " + std::to_string(e) + " not in reduced graph");
    }
  }
  if (!first.intersection(second).empty()) invalid_witness("paths share an edge");
  if (weight(g, first) + weight(g, second) > reduced.instance.bound.value_or(2)) {
    invalid_witness("total weight exceeds the bound");
  }
  auto split_edge = [&](VertexId v) {
    for (const auto& me : reduced.map.entries_for_source({'v', v})) {
      if (me.tag == "split") return me.target.id;
    }
    invalid_witness("map lacks the split edge of vertex " + std::to_string(v));
  };
  EdgeSet cycle = first.set_union(second);
  cycle.insert(split_edge(s));
  cycle.insert(split_edge(t));
  if (cycle.size() != first.size() + second.size() + 2) invalid_witness("paths use a split edge");
  if (!is_cycle(g, cycle)) invalid_witness("paths do not close into a cycle");
  if (weight(g, cycle) != 0) invalid_witness("closed cycle does not have weight 0");
  return split_directed_cycle(d, s, t, arcs_of(reduced.map, cycle));
}

ReducedInstance reduce_sp_to_sop(const UndirectedGraph& g, VertexId s, VertexId t) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw Error(ErrorCode::kInvalidInput, "s/t out of range");
  if (s == t) throw Error(ErrorCode::kInvalidInput, "s and t must differ");
  WitnessMap map{Gadget::kSpToSop, {}};
  UndirectedGraph h = g;
  for (VertexId v = 1; v <= g.num_vertices(); ++v) map.entries.push_back(entry('v', v, 'v', v));
  for (const Edge& e : g.edges()) map.entries.push_back(entry('e', e.id, 'e', e.id));
  const VertexId t_prime = h.add_vertex();
  const VertexId mid = h.add_vertex();
  map.entries.push_back(entry('-', 0, 'v', t_prime, "gadget"));
  map.entries.push_back(entry('-', 0, 'v', mid, "gadget"));
  for (auto [u, v] : {std::pair{t, t_prime}, std::pair{t, mid}, std::pair{mid, t_prime}}) {
    map.entries.push_back(entry('-', 0, 'e', h.add_edge(u, v, 0), "gadget"));
  }
  ReducedInstance r{undirected_instance(ProblemKind::kSOP, std::move(h)), std::move(map)};
  r.instance.roles["s"] = s;
  r.instance.roles["t"] = t_prime;
  return r;
}

EdgeSet lift_sop_to_sp(const ReducedInstance& reduced, const EdgeSet& path) {
  const auto& h = reduced.instance.graph;
  const VertexId s = reduced.instance.require_role("s");
  const VertexId t = reduced.instance.require_role("t");
  for (EdgeId e : path) {
    if (!h.has_edge(e)) invalid_witness("edge " + std::to_string(e) + " not in reduced graph");
  }
  if (!is_path(h, path, s, t)) invalid_witness("not an (s,t')-path");
  if (!path.is_odd()) invalid_witness("path is even");
  EdgeSet lifted;
  for (EdgeId e : path) {
    const auto src = reduced.map.source_of({'e', e});
    if (src && src->kind == 'e') lifted.insert(src->id);
  }
  return lifted;
}

ReducedInstance motj_conservative_zero_to_nonneg(const UndirectedGraph& g) {
  if (!is_conservative(g)) throw Error(ErrorCode::kNotConservative, "graph has a negative cycle");
  EdgeSet negatives = negative_edges(g);
  WitnessMap map{Gadget::kMotjZeroToNonneg, {}};
  for (VertexId v = 1; v <= g.num_vertices(); ++v) map.entries.push_back(entry('v', v, 'v', v));
  for (const Edge& e : g.edges()) {
    map.entries.push_back(entry('e', e.id, 'e', e.id, e.w < 0 ? "neg" : ""));
  }
  UndirectedGraph h = g;
  if (negatives.is_odd()) {
    if (g.num_vertices() == 0) throw Error(ErrorCode::kInvalidInput, "empty graph");
    const VertexId pendant = h.add_vertex();
    const EdgeId e = h.add_edge(1, pendant, -1);
    negatives.insert(e);
    map.entries.push_back(entry('-', 0, 'v', pendant, "pendant"));
    map.entries.push_back(entry('-', 0, 'e', e, "neg"));
  }
  TerminalSet odd(odd_vertices(h, negatives));
  ReducedInstance r{undirected_instance(ProblemKind::kMOTJ, absolute_weights(h)), std::move(map)};
  r.instance.terminals = std::move(odd);
  return r;
}

EdgeSet lift_nonneg_motj_to_zero(const ReducedInstance& reduced, const EdgeSet& join) {
  const auto& h = reduced.instance.graph;
  for (EdgeId e : join) {
    if (!h.has_edge(e)) invalid_witness("edge " + std::to_string(e) + " not in reduced graph");
  }
  if (!is_tjoin(h, reduced.instance.terminals, join)) invalid_witness("not a T-join");
  if (!join.is_odd()) invalid_witness("join is even");
  EdgeSet negatives;
  for (const auto& me : reduced.map.entries) {
    if (me.target.kind == 'e' && me.tag == "neg") negatives.insert(me.target.id);
  }
  EdgeSet lifted;
  for (EdgeId e : join.symmetric_difference(negatives)) {
    const auto src = reduced.map.source_of({'e', e});
    if (src && src->kind == 'e') lifted.insert(src->id);
  }
  return lifted;
}

OddTJoinResult min_odd_tjoin(const UndirectedGraph& g, const TerminalSet& terminals,
                             const SocOracle& soc) {
  const TJoinResult base = min_tjoin(g, terminals);
  if (base.join.is_odd()) return {base.join, base.weight, base.join, std::nullopt};
  if (is_bipartite(g)) {
    throw Error(ErrorCode::kInfeasibleOddJoin, "bipartite graph: every T-join is even");
  }
  // w[F] is conservative because F is a minimum T-join.
  const UndirectedGraph flipped = weight_flip(g, base.join);
  const auto cycle = soc(flipped);
  if (!cycle) throw Error(ErrorCode::kInfeasibleOddJoin, "no odd cycle under w[F]");
  EdgeSet join = base.join.symmetric_difference(cycle->edges);
  const Weight w = weight(g, join);
  return {std::move(join), w, base.join, cycle->edges};
}

EdgeSet odd_join_to_odd_cycle(const UndirectedGraph& g, const EdgeSet& join) {
  if (!odd_vertices(g, join).empty()) {
    throw Error(ErrorCode::kNotEvenDegrees, "input has odd-degree vertices");
  }
  if (!join.is_odd()) throw Error(ErrorCode::kEvenParity, "input has an even number of edges");
  const auto cycles = decompose_even_subgraph(g, join);
  const EdgeSet* best = nullptr;
  Weight best_w = 0;
  for (const auto& c : cycles) {
    if (!c.is_odd()) continue;
    const Weight w = weight(g, c);
    if (best == nullptr || w < best_w) {
      best = &c;
      best_w = w;
    }
  }
  // An odd edge count guarantees an odd cycle in any decomposition.
  return *best;
}

PathResult soc_via_socp(const UndirectedGraph& g, const SocpOracle& socp) {
  std::optional<PathResult> best;
  for (VertexId p = 1; p <= g.num_vertices(); ++p) {
    auto r = socp(g, p);
    if (r && (!best || r->weight < best->weight)) best = std::move(r);
  }
  if (!best) throw Error(ErrorCode::kInfeasible, "graph has no odd cycle");
  return *best;
}

std::optional<PathResult> soc_via_nonneg_motj(const UndirectedGraph& g,
                                              const NonnegMotjOracle& motj) {
  const ReducedInstance reduced = motj_conservative_zero_to_nonneg(g);
  const auto join = motj(reduced.instance.graph, reduced.instance.terminals);
  if (!join) return std::nullopt;
  const EdgeSet zero_join = lift_nonneg_motj_to_zero(reduced, join->join);
  EdgeSet cycle = odd_join_to_odd_cycle(g, zero_join);
  const Weight w = weight(g, cycle);
  return PathResult{std::move(cycle), w};
}

ReducedInstance reduce_instance(const ProblemInstance& source, ProblemKind target) {
  if (!source.kind) throw Error(ErrorCode::kInvalidInput, "source instance has no problem kind");
  const ProblemKind from = *source.kind;
  ReducedInstance r;
  if (from == ProblemKind::kBFP && target == ProblemKind::kSOCp) {
    r = reduce_bfp_to_socp(source.digraph, source.require_role("s"), source.require_role("t"));
  } else if (from == ProblemKind::kBFP && target == ProblemKind::kDISP) {
    r = reduce_bfp_to_disp(source.digraph, source.require_role("s"), source.require_role("t"));
  } else if (from == ProblemKind::kSOCp && target == ProblemKind::kSOP) {
    r = reduce_socp_to_sop(source.graph, source.require_role("p"), source.bound, SplitMode::kAuto);
  } else if (from == ProblemKind::kSP && target == ProblemKind::kSOP) {
    r = reduce_sp_to_sop(source.graph, source.require_role("s"), source.require_role("t"));
    r.instance.bound = source.bound;
  } else if (from == ProblemKind::kMOTJ && target == ProblemKind::kMOTJ) {
    if (!source.terminals.empty()) {
      throw Error(ErrorCode::kInvalidInput, "the MOTJ gadget expects T = empty set");
    }
    r = motj_conservative_zero_to_nonneg(source.graph);
    // The bound transforms with J -> J Δ E⁻: w(J Δ E⁻) = |w|(J) - |w|(E⁻).
    if (source.bound) {
      Weight neg = 0;
      for (const Edge& e : source.graph.edges()) {
        if (e.w < 0) neg -= e.w;
      }
      // The pendant edge weighs 1 in the target and cancels in the lift.
      const bool pendant = r.instance.graph.num_edges() > source.graph.num_edges();
      r.instance.bound = *source.bound + neg + (pendant ? 1 : 0);
    }
  } else {
    throw Error(ErrorCode::kInvalidInput, "no reduction from " + std::string(to_string(from)) +
                                              " to " + std::string(to_string(target)));
  }
  r.instance.scale = source.scale;
  return r;
}

Witness lift_witness(const ProblemInstance& source, const ReducedInstance& reduced,
                     const Witness& target_witness) {
  const EdgeSet first(target_witness.first);
  const EdgeSet second(target_witness.second);
  auto one = [](const EdgeSet& s) {
    return Witness{std::vector<int>(s.begin(), s.end()), {}, false};
  };
  switch (reduced.map.gadget) {
    case Gadget::kBfpToSocp: {
      require_kind(source, ProblemKind::kBFP);
      const auto paths = lift_socp_to_bfp(source.digraph, source.require_role("s"),
                                          source.require_role("t"), reduced, first);
      return Witness{paths.forward, paths.backward, true};
    }
    case Gadget::kBfpToDisp: {
      require_kind(source, ProblemKind::kBFP);
      const auto paths = lift_disp_to_bfp(source.digraph, source.require_role("s"),
                                          source.require_role("t"), reduced, first, second);
      return Witness{paths.forward, paths.backward, true};
    }
    case Gadget::kSocpToSop:
      require_kind(source, ProblemKind::kSOCp);
      return one(lift_sop_to_socp(reduced, first));
    case Gadget::kSpToSop:
      require_kind(source, ProblemKind::kSP);
      return one(lift_sop_to_sp(reduced, first));
    case Gadget::kMotjZeroToNonneg:
      require_kind(source, ProblemKind::kMOTJ);
      return one(lift_nonneg_motj_to_zero(reduced, first));
  }
  throw Error(ErrorCode::kInvalidInput, "unknown gadget");
}

}  // namespace cgt
