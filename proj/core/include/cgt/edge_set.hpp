#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "cgt/graph.hpp"

namespace cgt {

/// A set of edge ids, kept sorted and duplicate-free. Meaning (weight,
/// degrees) is always relative to a host graph passed in explicitly.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids);
  explicit EdgeSet(std::vector<EdgeId> ids);

  static EdgeSet all(const UndirectedGraph& g);

  bool contains(EdgeId e) const;
  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }
  bool is_odd() const { return (ids_.size() & 1U) != 0; }

  std::span<const EdgeId> ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  void insert(EdgeId e);
  void erase(EdgeId e);
  void toggle(EdgeId e);

  EdgeSet symmetric_difference(const EdgeSet& other) const;
  EdgeSet set_union(const EdgeSet& other) const;
  EdgeSet intersection(const EdgeSet& other) const;
  EdgeSet difference(const EdgeSet& other) const;

  /// Throws kUnknownEdge if some member is not an edge of `g`.
  void check_subset_of(const UndirectedGraph& g) const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<EdgeId> ids_;
};

Weight weight(const UndirectedGraph& g, const EdgeSet& s);

/// d_S(v) for v = 0..n (index 0 unused).
std::vector<int> degrees(const UndirectedGraph& g, const EdgeSet& s);

/// Vertices with odd degree in `s`, ascending.
std::vector<VertexId> odd_vertices(const UndirectedGraph& g, const EdgeSet& s);

/// V(S): vertices incident to some member of `s`, ascending.
std::vector<VertexId> touched_vertices(const UndirectedGraph& g, const EdgeSet& s);

/// Edges with strictly negative weight (E⁻).
EdgeSet negative_edges(const UndirectedGraph& g);

/// Sorted, duplicate-free vertex set.
class TerminalSet {
 public:
  TerminalSet() = default;
  TerminalSet(std::initializer_list<VertexId> vs);
  explicit TerminalSet(std::vector<VertexId> vs);

  bool contains(VertexId v) const;
  bool empty() const { return vs_.empty(); }
  int size() const { return static_cast<int>(vs_.size()); }
  std::span<const VertexId> vertices() const { return vs_; }
  auto begin() const { return vs_.begin(); }
  auto end() const { return vs_.end(); }

  TerminalSet symmetric_difference(const TerminalSet& other) const;

  bool operator==(const TerminalSet&) const = default;

 private:
  std::vector<VertexId> vs_;
};

}  // namespace cgt
