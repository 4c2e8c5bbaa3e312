#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#if defined(CGT_VENDORED_HEADERS)
#include "CLI11.hpp"
#include "json.hpp"
#else
#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>
#endif

#include "cgt/error.hpp"
#include "cgt/format.hpp"
#include "cgt/gen.hpp"
#include "cgt/reductions.hpp"
#include "cgt/solve.hpp"
#include "cgt/tjoin.hpp"
#include "cgt/verify.hpp"

namespace cgt::cli {
namespace {

using json = nlohmann::json;

struct Options {
  std::string format = "text";
  std::uint64_t budget = oracle::kDefaultBudgetSteps;
  std::uint64_t seed = 0;
  bool json() const { return format == "json"; }
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidInput, "cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kInvalidInput, "cannot write '" + path + "'");
  file << text;
}

// Parse errors name the file they came from.
ProblemInstance load_instance(const std::string& path, std::istream& in) {
  try {
    return parse_instance(read_input(path, in));
  } catch (const ParseError& e) {
    throw Error(ErrorCode::kParse, path + ": line " + std::to_string(e.line()) + ": " + e.detail());
  }
}

json weight_json(Weight w, Weight scale) {
  if (scale == 1) return w;
  return format_scaled(w, scale);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kTooLarge:
      return kExitBudget;
    case ErrorCode::kInfeasible:
    case ErrorCode::kInfeasibleOddJoin:
    case ErrorCode::kInvalidWitness:
      return kExitNo;
    default:
      return kExitInputError;
  }
}

std::string_view status_name(const ProblemInstance& inst, SolveStatus s) {
  const bool decision = inst.kind == ProblemKind::kBFP;
  switch (s) {
    case SolveStatus::kSolved: return decision ? "yes" : "optimal";
    case SolveStatus::kInfeasible: return decision ? "no" : "infeasible";
    case SolveStatus::kOverBound: return "over-bound";
  }
  return "?";
}

int cmd_check(const Options& opt, const std::string& path, Io io) {
  const ProblemInstance inst = load_instance(path, io.in);
  if (inst.directed) throw Error(ErrorCode::kInvalidInput, "check needs an undirected graph");
  const bool ok = is_conservative(inst.graph);
  if (opt.json()) {
    io.out << json{{"conservative", ok}}.dump() << '\n';
  } else {
    io.out << (ok ? "conservative" : "not conservative") << '\n';
  }
  return ok ? kExitYes : kExitNo;
}

int cmd_solve(const Options& opt, const std::string& path, const std::string& problem,
              Engine engine, Io io) {
  ProblemInstance inst = load_instance(path, io.in);
  if (!problem.empty()) {
    inst.kind = parse_problem_kind(problem);
    if (!inst.kind) throw Error(ErrorCode::kInvalidInput, "unknown problem kind '" + problem + "'");
    if (kind_is_directed(*inst.kind) != inst.directed) {
      throw Error(ErrorCode::kInvalidInput, "problem kind does not match the graph type");
    }
  }
  const SolveOutcome r = solve_instance(inst, engine, oracle::SearchBudget{opt.budget});

  if (r.status != SolveStatus::kInfeasible) {
    // Re-check the witness against the instance with the bound lifted.
    ProblemInstance unbounded = inst;
    unbounded.bound.reset();
    const Verdict v = verify_witness(unbounded, r.witness);
    if (!v.ok || v.weight != r.weight) {
      io.err << "internal error: solver witness fails '" << v.violated << "'\n";
      return kExitInternal;
    }
  }

  const bool has_weight = r.status != SolveStatus::kInfeasible && inst.kind != ProblemKind::kBFP;
  if (opt.json()) {
    json j{{"status", status_name(inst, r.status)}};
    if (has_weight) j["weight"] = weight_json(r.weight, inst.scale);
    if (r.status != SolveStatus::kInfeasible) {
      j["witness"] = r.witness.first;
      if (r.witness.two_lists) j["witness2"] = r.witness.second;
    }
    io.out << j.dump() << '\n';
  } else {
    io.out << "s " << status_name(inst, r.status) << '\n';
    if (has_weight) io.out << "o " << format_scaled(r.weight, inst.scale) << '\n';
    if (r.status != SolveStatus::kInfeasible) io.out << serialize_witness(r.witness);
  }
  return r.status == SolveStatus::kSolved ? kExitYes : kExitNo;
}

int cmd_reduce(const Options& opt, const std::string& path, const std::string& to,
               const std::string& out_path, const std::string& map_path, Io io) {
  const ProblemInstance source = load_instance(path, io.in);
  const auto target = parse_problem_kind(to);
  if (!target) throw Error(ErrorCode::kInvalidInput, "unknown problem kind '" + to + "'");
  const ReducedInstance r = reduce_instance(source, *target);
  const std::string inst_text = serialize_instance(r.instance);
  const std::string map_text = serialize_witness_map(r.map);
  if (opt.json()) {
    json j{{"gadget", to_string(r.map.gadget)}, {"instance", inst_text}, {"map", map_text}};
    if (!out_path.empty()) write_output(out_path, inst_text, io.out);
    if (!map_path.empty()) write_output(map_path, map_text, io.out);
    io.out << j.dump() << '\n';
    return kExitYes;
  }
  write_output(out_path, inst_text, io.out);
  write_output(map_path, map_text, io.out);
  return kExitYes;
}

ProblemInstance generated_instance(const std::string& family, const GenSpec& spec,
                                   const std::string& problem) {
  ProblemInstance inst;
  if (family == "bfp") {
    BfpInstance b = gen_bfp(spec);
    inst.kind = ProblemKind::kBFP;
    inst.directed = true;
    inst.digraph = std::move(b.digraph);
    inst.roles = {{"s", b.s}, {"t", b.t}};
    return inst;
  }
  inst.graph = family == "conservative" ? gen_conservative(spec) : gen_matching_negatives(spec);
  if (problem.empty()) return inst;
  inst.kind = parse_problem_kind(problem);
  if (!inst.kind || kind_is_directed(*inst.kind)) {
    throw Error(ErrorCode::kInvalidInput, "--problem must be an undirected kind");
  }
  const int n = spec.n;
  auto need = [&](int count) {
    if (n < count) throw Error(ErrorCode::kInvalidInput, "too few vertices for the terminals");
  };
  switch (*inst.kind) {
    case ProblemKind::kSP:
    case ProblemKind::kSOP:
      need(2);
      inst.roles = {{"s", 1}, {"t", n}};
      break;
    case ProblemKind::kSOCp:
      need(1);
      inst.roles = {{"p", 1}};
      break;
    case ProblemKind::kDISP:
      need(4);
      inst.roles = {{"s1", 1}, {"s2", 2}, {"t1", n - 1}, {"t2", n}};
      break;
    default:
      break;
  }
  return inst;
}

int cmd_gen(const Options& opt, const std::string& family, int n, int m, Weight wmax,
            const std::string& problem, Io io) {
  const GenSpec spec{n, m, wmax, opt.seed};
  const ProblemInstance inst = generated_instance(family, spec, problem);
  std::ostringstream text;
  text << "c cgt gen family=" << family << " n=" << n << " m=" << m << " wmax=" << wmax
       << " seed=" << opt.seed << '\n';
  text << serialize_instance(inst);
  if (opt.json()) {
    io.out << json{{"instance", text.str()}}.dump() << '\n';
  } else {
    io.out << text.str();
  }
  return kExitYes;
}

struct VerifyReport {
  int code = kExitYes;
  std::string line;  // "ok <w>", "violated <predicate>", or "error <message>"
  std::optional<Witness> lifted;
};

VerifyReport verify_one(const std::string& inst_path, const std::string& witness_path,
                        const std::string& source_path, const std::string& map_path,
                        std::istream& in) {
  try {
    ProblemInstance inst = load_instance(inst_path, in);
    Witness w = parse_witness(read_input(witness_path, in));
    VerifyReport report;
    if (!map_path.empty()) {
      const WitnessMap map = parse_witness_map(read_input(map_path, in));
      const ProblemInstance source = load_instance(source_path, in);
      try {
        w = lift_witness(source, ReducedInstance{inst, map}, w);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kInvalidWitness) throw;
        return {kExitNo, std::string("violated lift (") + e.what() + ")", std::nullopt};
      }
      inst = source;
      report.lifted = w;
    }
    const Verdict v = verify_witness(inst, w);
    if (!v.ok) return {kExitNo, "violated " + v.violated, std::nullopt};
    report.line = "ok " + format_scaled(v.weight, inst.scale);
    return report;
  } catch (const Error& e) {
    return {exit_code_for(e.code()) == kExitNo ? kExitNo : kExitInputError,
            std::string("error ") + e.what(), std::nullopt};
  }
}

int cmd_verify(const Options& opt, const std::vector<std::string>& files,
               const std::string& source_path, const std::string& map_path,
               const std::string& batch, Io io) {
  if (!batch.empty()) {
    std::istringstream list(read_input(batch, io.in));
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string a, b;
    for (std::string line; std::getline(list, line);) {
      std::istringstream fields(line);
      if (!(fields >> a)) continue;
      if (a[0] == '#') continue;
      if (!(fields >> b)) throw Error(ErrorCode::kInvalidInput, "batch line needs two paths");
      if (a == "-" || b == "-") throw Error(ErrorCode::kInvalidInput, "batch paths cannot be '-'");
      pairs.emplace_back(a, b);
    }
    std::vector<std::future<VerifyReport>> jobs;
    for (const auto& [ip, wp] : pairs) {
      jobs.push_back(std::async(std::launch::async, [ip, wp, &io] {
        return verify_one(ip, wp, {}, {}, io.in);
      }));
    }
    int worst = kExitYes;
    json results = json::array();
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const VerifyReport r = jobs[i].get();
      worst = std::max(worst, r.code);
      if (opt.json()) {
        results.push_back({{"instance", pairs[i].first}, {"witness", pairs[i].second},
                           {"result", r.line}});
      } else {
        io.out << pairs[i].first << ' ' << pairs[i].second << ' ' << r.line << '\n';
      }
    }
    if (opt.json()) io.out << results.dump() << '\n';
    return worst;
  }

  if (files.size() != 2) throw Error(ErrorCode::kInvalidInput, "verify needs INSTANCE WITNESS");
  if (map_path.empty() != source_path.empty()) {
    throw Error(ErrorCode::kInvalidInput, "--map and --source go together");
  }
  const VerifyReport r = verify_one(files[0], files[1], source_path, map_path, io.in);
  if (r.code == kExitInputError) throw Error(ErrorCode::kInvalidInput, r.line.substr(6));
  if (opt.json()) {
    json j{{"result", r.line}};
    if (r.lifted) {
      j["witness"] = r.lifted->first;
      if (r.lifted->two_lists) j["witness2"] = r.lifted->second;
    }
    io.out << j.dump() << '\n';
  } else {
    io.out << r.line << '\n';
    if (r.lifted) io.out << serialize_witness(*r.lifted);
  }
  return r.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Io io{in, out, err};
  Options opt;
  CLI::App app{"Exact solvers, brute-force oracles and gadget reductions for conservative graphs",
               "cgt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", opt.budget, "Step limit for exhaustive searches");
  app.add_option("--seed", opt.seed, "Generator seed");

  std::string path;
  std::string problem;

  auto* check = app.add_subcommand("check", "Decide whether the weights are conservative");
  check->add_option("instance", path, "Instance file ('-' for stdin)")->required();

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("instance", path)->required();
  solve->add_option("--problem", problem, "Override the problem kind");

  auto* oracle_cmd = app.add_subcommand("oracle", "Solve an instance by exhaustive search");
  oracle_cmd->add_option("instance", path)->required();
  oracle_cmd->add_option("--problem", problem, "Override the problem kind");

  std::string to, out_path, map_path, source_path, batch;
  auto* reduce = app.add_subcommand("reduce", "Apply a gadget reduction");
  reduce->add_option("instance", path)->required();
  reduce->add_option("--to", to, "Target problem kind")->required();
  reduce->add_option("--out", out_path, "Write the target instance here");
  reduce->add_option("--map", map_path, "Write the witness map here");

  std::string family;
  int n = 0, m = 0;
  Weight wmax = 3;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", family, "Generator family")
      ->required()
      ->check(CLI::IsMember({"conservative", "matching", "bfp"}));
  gen->add_option("--n", n, "Vertices")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--m", m, "Edges or arcs")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--wmax", wmax, "Weight magnitude bound")->check(CLI::NonNegativeNumber);
  gen->add_option("--problem", problem, "Problem kind to tag the instance with");

  std::vector<std::string> files;
  auto* verify = app.add_subcommand("verify", "Check a witness against an instance");
  verify->add_option("files", files, "INSTANCE WITNESS");
  verify->add_option("--source", source_path, "Source instance to lift the witness onto");
  verify->add_option("--map", map_path, "Witness map produced by reduce");
  verify->add_option("--batch", batch, "File listing 'INSTANCE WITNESS' pairs, one per line");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(opt, path, io);
    if (solve->parsed()) return cmd_solve(opt, path, problem, Engine::kDefault, io);
    if (oracle_cmd->parsed()) return cmd_solve(opt, path, problem, Engine::kOracle, io);
    if (reduce->parsed()) return cmd_reduce(opt, path, to, out_path, map_path, io);
    if (gen->parsed()) return cmd_gen(opt, family, n, m, wmax, problem, io);
    if (verify->parsed()) return cmd_verify(opt, files, source_path, map_path, batch, io);
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    if (code == kExitNo && e.code() != ErrorCode::kInvalidWitness) {
      out << (opt.json() ? json{{"status", "infeasible"}}.dump() : "s infeasible") << '\n';
    } else {
      err << "cgt: " << e.what() << '\n';
    }
    return code;
  }
  return kExitInputError;
}

}  // namespace cgt::cli
