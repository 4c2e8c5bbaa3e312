#include "cgt/edge_set.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "cgt/error.hpp"

namespace cgt {
namespace {

template <typename T>
void normalize(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

EdgeSet::EdgeSet(std::initializer_list<EdgeId> ids) : ids_(ids) { normalize(ids_); }

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) { normalize(ids_); }

EdgeSet EdgeSet::all(const UndirectedGraph& g) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 1; e <= g.num_edges(); ++e) ids[static_cast<std::size_t>(e - 1)] = e;
  return EdgeSet(std::move(ids));
}

bool EdgeSet::contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }

void EdgeSet::insert(EdgeId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it == ids_.end() || *it != e) ids_.insert(it, e);
}

void EdgeSet::erase(EdgeId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it != ids_.end() && *it == e) ids_.erase(it);
}

void EdgeSet::toggle(EdgeId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it != ids_.end() && *it == e) {
    ids_.erase(it);
  } else {
    ids_.insert(it, e);
  }
}

EdgeSet EdgeSet::symmetric_difference(const EdgeSet& other) const {
  EdgeSet out;
  std::set_symmetric_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                                std::back_inserter(out.ids_));
  return out;
}

EdgeSet EdgeSet::set_union(const EdgeSet& other) const {
  EdgeSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

EdgeSet EdgeSet::intersection(const EdgeSet& other) const {
  EdgeSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

EdgeSet EdgeSet::difference(const EdgeSet& other) const {
  EdgeSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

void EdgeSet::check_subset_of(const UndirectedGraph& g) const {
  for (EdgeId e : ids_) {
    if (!g.has_edge(e)) throw Error(ErrorCode::kUnknownEdge, "edge id " + std::to_string(e));
  }
}

Weight weight(const UndirectedGraph& g, const EdgeSet& s) {
  s.check_subset_of(g);
  Weight total = 0;
  for (EdgeId e : s) total += g.edge(e).w;
  return total;
}

std::vector<int> degrees(const UndirectedGraph& g, const EdgeSet& s) {
  s.check_subset_of(g);
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (EdgeId e : s) {
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  return deg;
}

std::vector<VertexId> odd_vertices(const UndirectedGraph& g, const EdgeSet& s) {
  const auto deg = degrees(g, s);
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] % 2 != 0) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> touched_vertices(const UndirectedGraph& g, const EdgeSet& s) {
  const auto deg = degrees(g, s);
  std::vector<VertexId> out;
  for (VertexId v = 1; v <= g.num_vertices(); ++v) {
    if (deg[static_cast<std::size_t>(v)] > 0) out.push_back(v);
  }
  return out;
}

EdgeSet negative_edges(const UndirectedGraph& g) {
  std::vector<EdgeId> ids;
  for (const Edge& e : g.edges()) {
    if (e.w < 0) ids.push_back(e.id);
  }
  return EdgeSet(std::move(ids));
}

TerminalSet::TerminalSet(std::initializer_list<VertexId> vs) : vs_(vs) { normalize(vs_); }

TerminalSet::TerminalSet(std::vector<VertexId> vs) : vs_(std::move(vs)) { normalize(vs_); }

bool TerminalSet::contains(VertexId v) const {
  return std::binary_search(vs_.begin(), vs_.end(), v);
}

TerminalSet TerminalSet::symmetric_difference(const TerminalSet& other) const {
  std::vector<VertexId> out;
  std::set_symmetric_difference(vs_.begin(), vs_.end(), other.vs_.begin(), other.vs_.end(),
                                std::back_inserter(out));
  return TerminalSet(std::move(out));
}

}  // namespace cgt
