#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cgt {

using Weight = std::int64_t;
using VertexId = int;  // 1..n
using EdgeId = int;    // 1..m, assigned in insertion order
using ArcId = int;     // 1..m, assigned in insertion order

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Weight w;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph with exact integer weights. Loops are rejected;
/// parallel edges are kept as distinct edges.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(int n);

  /// Appends an edge and returns its id (m+1). Throws kInvalidInput on a loop
  /// or an out-of-range endpoint.
  EdgeId add_edge(VertexId u, VertexId v, Weight w);

  /// Adds a fresh isolated vertex and returns its id.
  VertexId add_vertex();

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const { return v >= 1 && v <= n_; }
  bool has_edge(EdgeId e) const { return e >= 1 && e <= num_edges(); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e - 1)]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Incident edge ids of `v` in increasing id order.
  std::span<const EdgeId> incident(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  void set_weight(EdgeId e, Weight w) { edges_[static_cast<std::size_t>(e - 1)].w = w; }

  bool operator==(const UndirectedGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_{1};
};

struct Arc {
  ArcId id;
  VertexId tail;
  VertexId head;

  bool operator==(const Arc&) const = default;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  ArcId add_arc(VertexId tail, VertexId head);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  bool has_vertex(VertexId v) const { return v >= 1 && v <= n_; }
  bool has_arc(ArcId a) const { return a >= 1 && a <= num_arcs(); }

  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a - 1)]; }
  std::span<const Arc> arcs() const { return arcs_; }

  /// Outgoing arc ids of `v` in increasing id order.
  std::span<const ArcId> out_arcs(VertexId v) const {
    return out_[static_cast<std::size_t>(v)];
  }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_{1};
};

}  // namespace cgt
