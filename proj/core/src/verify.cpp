#include "cgt/verify.hpp"

#include <algorithm>
#include <set>

#include "cgt/edge_set.hpp"
#include "cgt/error.hpp"
#include "cgt/graph_ops.hpp"
#include "cgt/oracle.hpp"

namespace cgt {
namespace {

Verdict fail(std::string predicate) { return Verdict{false, std::move(predicate), 0}; }

bool distinct(const std::vector<int>& ids) {
  return std::set<int>(ids.begin(), ids.end()).size() == ids.size();
}

// Endpoint pair of a path given as an edge set, if it has exactly two
// odd-degree vertices.
std::optional<std::pair<VertexId, VertexId>> endpoints(const UndirectedGraph& g,
                                                       const EdgeSet& path) {
  const auto odd = odd_vertices(g, path);
  if (odd.size() != 2) return std::nullopt;
  return std::pair{odd[0], odd[1]};
}

Verdict check_disp(const ProblemInstance& inst, const EdgeSet& a, const EdgeSet& b) {
  const auto& g = inst.graph;
  const VertexId s1 = inst.require_role("s1");
  const VertexId s2 = inst.require_role("s2");
  const VertexId t1 = inst.require_role("t1");
  const VertexId t2 = inst.require_role("t2");
  const std::array<const EdgeSet*, 2> paths = {&a, &b};
  std::array<VertexId, 2> starts{};
  std::array<VertexId, 2> ends{};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto ep = endpoints(g, *paths[i]);
    if (!ep) return fail("path");
    auto [x, y] = *ep;
    if (x == t1 || x == t2) std::swap(x, y);
    if ((x != s1 && x != s2) || (y != t1 && y != t2)) return fail("terminals");
    if (!is_path(g, *paths[i], x, y)) return fail("path");
    starts[i] = x;
    ends[i] = y;
  }
  if (starts[0] == starts[1] || ends[0] == ends[1]) return fail("terminals");
  const auto va = touched_vertices(g, a);
  const auto vb = touched_vertices(g, b);
  std::vector<VertexId> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  if (!common.empty()) return fail("vertex-disjoint");
  return Verdict{true, {}, weight(g, a) + weight(g, b)};
}

Verdict check_bfp(const ProblemInstance& inst, const Witness& w) {
  const auto& d = inst.digraph;
  for (const auto* list : {&w.first, &w.second}) {
    for (int a : *list) {
      if (!d.has_arc(a)) return fail("ids-exist");
    }
  }
  if (!w.two_lists) return fail("two-lists");
  const oracle::BackAndForth paths{w.first, w.second};
  if (!oracle::is_back_and_forth(d, inst.require_role("s"), inst.require_role("t"), paths)) {
    return fail("back-and-forth");
  }
  return Verdict{true, {}, 0};
}

}  // namespace

Verdict verify_witness(const ProblemInstance& inst, const Witness& w) {
  if (!inst.kind) throw Error(ErrorCode::kInvalidInput, "instance has no problem kind");
  for (auto role : required_roles(*inst.kind)) inst.require_role(role);
  if (!distinct(w.first) || !distinct(w.second)) return fail("distinct-ids");

  Verdict v;
  if (*inst.kind == ProblemKind::kBFP) {
    v = check_bfp(inst, w);
  } else {
    const auto& g = inst.graph;
    for (const auto* list : {&w.first, &w.second}) {
      for (int e : *list) {
        if (!g.has_edge(e)) return fail("ids-exist");
      }
    }
    const EdgeSet a(w.first);
    const EdgeSet b(w.second);
    const bool two = *inst.kind == ProblemKind::kDISP;
    if (two ? !w.two_lists : !b.empty()) return fail("two-lists");
    switch (*inst.kind) {
      case ProblemKind::kSP:
        if (!is_path(g, a, inst.require_role("s"), inst.require_role("t"))) return fail("path");
        break;
      case ProblemKind::kSOP:
        if (!is_path(g, a, inst.require_role("s"), inst.require_role("t"))) return fail("path");
        if (!a.is_odd()) return fail("odd");
        break;
      case ProblemKind::kSOC:
        if (!is_cycle(g, a)) return fail("cycle");
        if (!a.is_odd()) return fail("odd");
        break;
      case ProblemKind::kSOCp:
        if (!is_cycle(g, a)) return fail("cycle");
        if (degrees(g, a)[static_cast<std::size_t>(inst.require_role("p"))] != 2) {
          return fail("through-p");
        }
        if (!a.is_odd()) return fail("odd");
        break;
      case ProblemKind::kMOTJ:
        if (!is_tjoin(g, inst.terminals, a)) return fail("t-join");
        if (!a.is_odd()) return fail("odd");
        break;
      case ProblemKind::kDISP: {
        const Verdict d = check_disp(inst, a, b);
        if (!d.ok) return d;
        break;
      }
      case ProblemKind::kBFP:
        break;
    }
    v = Verdict{true, {}, weight(g, a) + weight(g, b)};
  }
  if (!v.ok) return v;
  if (inst.bound && v.weight > *inst.bound && *inst.kind != ProblemKind::kBFP) {
    return fail("bound");
  }
  return v;
}

}  // namespace cgt
