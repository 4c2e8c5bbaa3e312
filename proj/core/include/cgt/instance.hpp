#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/edge_set.hpp"
#include "cgt/graph.hpp"

namespace cgt {

enum class ProblemKind { kSP, kSOP, kSOC, kSOCp, kDISP, kMOTJ, kBFP };

std::string_view to_string(ProblemKind kind);
std::optional<ProblemKind> parse_problem_kind(std::string_view token);

/// Terminal role names in canonical order.
inline constexpr std::array<std::string_view, 7> kRoleNames = {"s", "t", "s1", "s2", "t1", "t2",
                                                                "p"};

/// Roles a problem kind needs to be well-posed.
std::vector<std::string_view> required_roles(ProblemKind kind);

bool kind_is_directed(ProblemKind kind);

/// One problem instance as read from (or written to) the text format.
///
/// Weights and the bound are stored scaled by `scale` so that rational input
/// stays exact; `scale` is 1 for integer input.
struct ProblemInstance {
  std::optional<ProblemKind> kind;
  bool directed = false;
  UndirectedGraph graph;
  Digraph digraph;
  TerminalSet terminals;
  std::map<std::string, VertexId, std::less<>> roles;
  std::optional<Weight> bound;
  Weight scale = 1;

  std::optional<VertexId> role(std::string_view name) const;

  /// Throws kInvalidInput if `name` is absent.
  VertexId require_role(std::string_view name) const;

  int num_vertices() const { return directed ? digraph.num_vertices() : graph.num_vertices(); }

  bool operator==(const ProblemInstance&) const = default;
};

/// Solution witness: edge (or arc) ids. Problems with two paths (DISP, BFP)
/// use both lists.
struct Witness {
  std::vector<int> first;
  std::vector<int> second;
  bool two_lists = false;

  bool operator==(const Witness&) const = default;
};

}  // namespace cgt
