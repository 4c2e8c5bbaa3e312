#include "cgt/format.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <vector>

#include "cgt/error.hpp"

namespace cgt {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty() && line.tokens[0] != "c") lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

std::int64_t parse_int(const Line& line, std::string_view token, const char* what) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && token[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(line.number, std::string("bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Rational parse_rational(const Line& line, std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return {parse_int(line, token, "weight"), 1};
  Rational r{parse_int(line, token.substr(0, slash), "weight"),
             parse_int(line, token.substr(slash + 1), "denominator")};
  if (r.den <= 0) throw ParseError(line.number, "denominator must be positive");
  return r;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw ParseError(line.number, "'" + std::string(line.tokens[0]) + "' record needs " +
                                      std::to_string(arity - 1) + " field(s)");
  }
}

Weight scaled(const Line& line, Rational r, Weight scale) {
  Weight out = 0;
  if (__builtin_mul_overflow(r.num, scale / r.den, &out)) {
    throw ParseError(line.number, "weight overflows after scaling");
  }
  return out;
}

ElementRef parse_ref(const Line& line, std::string_view token) {
  if (token == "-") return {};
  if (token.size() < 2 || (token[0] != 'v' && token[0] != 'e' && token[0] != 'a')) {
    throw ParseError(line.number, "bad element id '" + std::string(token) + "'");
  }
  const auto id = parse_int(line, token.substr(1), "element id");
  if (id <= 0) throw ParseError(line.number, "element ids are positive");
  return {token[0], static_cast<int>(id)};
}

std::string ref_to_string(ElementRef r) {
  if (r.kind == '-') return "-";
  return std::string(1, r.kind) + std::to_string(r.id);
}

}  // namespace

ProblemInstance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  ProblemInstance inst;
  bool have_header = false;
  int declared_m = 0;
  int n = 0;
  int header_line = 0;
  int kind_line = 0;

  struct PendingEdge {
    const Line* line;
    VertexId u, v;
    Rational w;
  };
  std::vector<PendingEdge> edges;
  std::vector<VertexId> terminals;
  std::optional<std::pair<const Line*, Rational>> bound;

  auto vertex = [&](const Line& line, std::string_view token) {
    const auto v = parse_int(line, token, "vertex");
    if (v < 1 || v > n) {
      throw ParseError(line.number, "vertex " + std::string(token) + " out of range 1.." +
                                        std::to_string(n));
    }
    return static_cast<VertexId>(v);
  };

  for (const Line& line : lines) {
    const std::string_view tag = line.tokens[0];
    if (!have_header && tag != "p") throw ParseError(line.number, "expected 'p' header first");
    if (tag == "p") {
      if (have_header) throw ParseError(line.number, "duplicate header");
      expect_arity(line, 5);
      if (line.tokens[1] != "cgf") throw ParseError(line.number, "format tag must be 'cgf'");
      if (line.tokens[2] == "digraph") {
        inst.directed = true;
      } else if (line.tokens[2] != "ugraph") {
        throw ParseError(line.number, "graph type must be ugraph or digraph");
      }
      const auto nn = parse_int(line, line.tokens[3], "vertex count");
      const auto mm = parse_int(line, line.tokens[4], "edge count");
      if (nn < 0 || mm < 0 || nn > 100'000'000 || mm > 100'000'000) {
        throw ParseError(line.number, "counts out of range");
      }
      n = static_cast<int>(nn);
      declared_m = static_cast<int>(mm);
      have_header = true;
      header_line = line.number;
    } else if (tag == "q") {
      expect_arity(line, 2);
      if (inst.kind) throw ParseError(line.number, "duplicate problem kind");
      inst.kind = parse_problem_kind(line.tokens[1]);
      if (!inst.kind) {
        throw ParseError(line.number, "unknown problem kind '" + std::string(line.tokens[1]) + "'");
      }
      kind_line = line.number;
    } else if (tag == "e") {
      expect_arity(line, inst.directed ? 3 : 4);
      const VertexId u = vertex(line, line.tokens[1]);
      const VertexId v = vertex(line, line.tokens[2]);
      if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
      Rational w;
      if (!inst.directed) w = parse_rational(line, line.tokens[3]);
      edges.push_back({&line, u, v, w});
    } else if (tag == "t") {
      expect_arity(line, 2);
      const VertexId v = vertex(line, line.tokens[1]);
      for (VertexId x : terminals) {
        if (x == v) throw ParseError(line.number, "duplicate T member " + std::to_string(v));
      }
      terminals.push_back(v);
    } else if (tag == "x") {
      expect_arity(line, 3);
      const std::string role(line.tokens[1]);
      bool known = false;
      for (auto r : kRoleNames) known = known || r == role;
      if (!known) throw ParseError(line.number, "unknown terminal role '" + role + "'");
      if (inst.roles.contains(role)) {
        throw ParseError(line.number, "duplicate terminal role '" + role + "'");
      }
      inst.roles[role] = vertex(line, line.tokens[2]);
    } else if (tag == "k") {
      expect_arity(line, 2);
      if (bound) throw ParseError(line.number, "duplicate bound");
      bound = std::pair{&line, parse_rational(line, line.tokens[1])};
    } else {
      throw ParseError(line.number, "unknown record '" + std::string(tag) + "'");
    }
  }
  if (!have_header) throw ParseError(1, "missing 'p' header");
  if (static_cast<int>(edges.size()) != declared_m) {
    throw ParseError(header_line, "header declares " + std::to_string(declared_m) +
                                      " edges, file has " + std::to_string(edges.size()));
  }
  if (inst.kind) {
    if (kind_is_directed(*inst.kind) != inst.directed) {
      throw ParseError(kind_line, "problem kind does not match the graph type");
    }
    for (auto role : required_roles(*inst.kind)) {
      if (!inst.role(role)) {
        throw ParseError(kind_line, "problem needs terminal role '" + std::string(role) + "'");
      }
    }
  }

  Weight scale = 1;
  auto widen = [&](const Line& line, std::int64_t den) {
    scale = std::lcm(scale, den);
    if (scale > (Weight{1} << 40)) throw ParseError(line.number, "denominators too large");
  };
  for (const auto& e : edges) widen(*e.line, e.w.den);
  if (bound) widen(*bound->first, bound->second.den);
  inst.scale = scale;

  if (inst.directed) {
    inst.digraph = Digraph(n);
    for (const auto& e : edges) inst.digraph.add_arc(e.u, e.v);
  } else {
    inst.graph = UndirectedGraph(n);
    for (const auto& e : edges) inst.graph.add_edge(e.u, e.v, scaled(*e.line, e.w, scale));
  }
  inst.terminals = TerminalSet(std::move(terminals));
  if (bound) inst.bound = scaled(*bound->first, bound->second, scale);
  return inst;
}

std::string format_scaled(Weight value, Weight scale) {
  const Weight g = std::gcd(value, scale);
  const Weight num = value / (g == 0 ? 1 : g);
  const Weight den = scale / (g == 0 ? 1 : g);
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string serialize_instance(const ProblemInstance& inst) {
  std::ostringstream out;
  const int m = inst.directed ? inst.digraph.num_arcs() : inst.graph.num_edges();
  out << "p cgf " << (inst.directed ? "digraph" : "ugraph") << ' ' << inst.num_vertices() << ' '
      << m << '\n';
  if (inst.kind) out << "q " << to_string(*inst.kind) << '\n';
  if (inst.directed) {
    for (const Arc& a : inst.digraph.arcs()) out << "e " << a.tail << ' ' << a.head << '\n';
  } else {
    for (const Edge& e : inst.graph.edges()) {
      out << "e " << e.u << ' ' << e.v << ' ' << format_scaled(e.w, inst.scale) << '\n';
    }
  }
  for (VertexId v : inst.terminals) out << "t " << v << '\n';
  for (auto role : kRoleNames) {
    if (auto v = inst.role(role)) out << "x " << role << ' ' << *v << '\n';
  }
  if (inst.bound) out << "k " << format_scaled(*inst.bound, inst.scale) << '\n';
  return out.str();
}

Witness parse_witness(std::string_view text) {
  Witness w;
  for (const Line& line : tokenize(text)) {
    const std::string_view tag = line.tokens[0];
    if (tag == "s" || tag == "o") continue;
    if (tag == "w2") {
      expect_arity(line, 1);
      if (w.two_lists) throw ParseError(line.number, "second 'w2' separator");
      w.two_lists = true;
    } else if (tag == "w") {
      expect_arity(line, 2);
      const auto id = parse_int(line, line.tokens[1], "id");
      if (id < 1 || id > 1'000'000'000) throw ParseError(line.number, "ids are positive");
      (w.two_lists ? w.second : w.first).push_back(static_cast<int>(id));
    } else {
      throw ParseError(line.number, "unknown witness record '" + std::string(tag) + "'");
    }
  }
  return w;
}

std::string serialize_witness(const Witness& w) {
  std::ostringstream out;
  for (int id : w.first) out << "w " << id << '\n';
  if (w.two_lists) {
    out << "w2\n";
    for (int id : w.second) out << "w " << id << '\n';
  }
  return out.str();
}

WitnessMap parse_witness_map(std::string_view text) {
  WitnessMap map;
  bool have_gadget = false;
  for (const Line& line : tokenize(text)) {
    const std::string_view tag = line.tokens[0];
    if (tag == "g") {
      expect_arity(line, 2);
      if (have_gadget) throw ParseError(line.number, "duplicate gadget line");
      const auto g = parse_gadget(line.tokens[1]);
      if (!g) throw ParseError(line.number, "unknown gadget '" + std::string(line.tokens[1]) + "'");
      map.gadget = *g;
      have_gadget = true;
    } else if (tag == "map") {
      if (line.tokens.size() != 3 && line.tokens.size() != 4) {
        throw ParseError(line.number, "'map' record needs 2 or 3 fields");
      }
      MapEntry e{parse_ref(line, line.tokens[1]), parse_ref(line, line.tokens[2]), {}};
      if (line.tokens.size() == 4) e.tag = std::string(line.tokens[3]);
      map.entries.push_back(std::move(e));
    } else {
      throw ParseError(line.number, "unknown map record '" + std::string(tag) + "'");
    }
  }
  if (!have_gadget) throw ParseError(1, "witness map lacks a 'g' line");
  return map;
}

std::string serialize_witness_map(const WitnessMap& map) {
  std::ostringstream out;
  out << "g " << to_string(map.gadget) << '\n';
  for (const auto& e : map.entries) {
    out << "map " << ref_to_string(e.source) << ' ' << ref_to_string(e.target);
    if (!e.tag.empty()) out << ' ' << e.tag;
    out << '\n';
  }
  return out.str();
}

}  // namespace cgt
