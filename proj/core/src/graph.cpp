#include "cgt/graph.hpp"

#include <string>

#include "cgt/error.hpp"

namespace cgt {

UndirectedGraph::UndirectedGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw Error(ErrorCode::kInvalidInput, "negative vertex count");
}

EdgeId UndirectedGraph::add_edge(VertexId u, VertexId v, Weight w) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw Error(ErrorCode::kInvalidInput,
                "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) throw Error(ErrorCode::kInvalidInput, "loop at vertex " + std::to_string(u));
  const EdgeId id = num_edges() + 1;
  edges_.push_back(Edge{id, u, v, w});
  adjacency_[static_cast<std::size_t>(u)].push_back(id);
  adjacency_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

VertexId UndirectedGraph::add_vertex() {
  ++n_;
  adjacency_.emplace_back();
  return n_;
}

Digraph::Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw Error(ErrorCode::kInvalidInput, "negative vertex count");
}

ArcId Digraph::add_arc(VertexId tail, VertexId head) {
  if (!has_vertex(tail) || !has_vertex(head)) {
    throw Error(ErrorCode::kInvalidInput, "arc endpoint out of range: " + std::to_string(tail) +
                                              " " + std::to_string(head));
  }
  if (tail == head) throw Error(ErrorCode::kInvalidInput, "self-arc at " + std::to_string(tail));
  const ArcId id = num_arcs() + 1;
  arcs_.push_back(Arc{id, tail, head});
  out_[static_cast<std::size_t>(tail)].push_back(id);
  return id;
}

}  // namespace cgt
