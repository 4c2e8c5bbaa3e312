#include "cgt/instance.hpp"

#include <string>

#include "cgt/error.hpp"

namespace cgt {

namespace {

constexpr std::array<std::pair<ProblemKind, std::string_view>, 7> kKindNames = {{
    {ProblemKind::kSP, "sp"},
    {ProblemKind::kSOP, "sop"},
    {ProblemKind::kSOC, "soc"},
    {ProblemKind::kSOCp, "socp"},
    {ProblemKind::kDISP, "disp"},
    {ProblemKind::kMOTJ, "motj"},
    {ProblemKind::kBFP, "bfp"},
}};

}  // namespace

std::string_view to_string(ProblemKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view token) {
  for (const auto& [k, name] : kKindNames) {
    if (name == token) return k;
  }
  return std::nullopt;
}

std::vector<std::string_view> required_roles(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kSP:
    case ProblemKind::kSOP:
    case ProblemKind::kBFP:
      return {"s", "t"};
    case ProblemKind::kSOCp:
      return {"p"};
    case ProblemKind::kDISP:
      return {"s1", "s2", "t1", "t2"};
    case ProblemKind::kSOC:
    case ProblemKind::kMOTJ:
      return {};
  }
  return {};
}

bool kind_is_directed(ProblemKind kind) { return kind == ProblemKind::kBFP; }

std::optional<VertexId> ProblemInstance::role(std::string_view name) const {
  const auto it = roles.find(name);
  if (it == roles.end()) return std::nullopt;
  return it->second;
}

VertexId ProblemInstance::require_role(std::string_view name) const {
  if (auto v = role(name)) return *v;
  throw Error(ErrorCode::kInvalidInput, "missing terminal role '" + std::string(name) + "'");
}

}  // namespace cgt
