#include "drd/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "drd/certify.hpp"
#include "drd/error.hpp"
#include "drd/generators.hpp"
#include "drd/instance_io.hpp"
#include "drd/report_json.hpp"
#include "drd/solve.hpp"
#include "drd/theorems.hpp"
#include "parse_util.hpp"

namespace drd::cli {

namespace {

struct Options {
  std::string input;
  std::string rule = "ceil";
  std::string method = "auto";
  std::string set;
  std::string subset;
  std::string family;
  std::vector<std::string> f_modes;
  std::string theorems;
  std::string corpus;
  int trials = 1;
  std::uint64_t seed = 0;
  int limit = 20;
  std::string counterexample_dir;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Instance load(const Options& o, std::istream& in) { return parse_instance(read_input(o.input, in)); }

VertexSet parse_csv_set(const std::string& text) {
  if (text.empty()) return {};
  auto values = detail::parse_int_list(text);
  if (!values) throw Error(ErrorKind::SyntaxError, "bad vertex list '" + text + "'");
  return VertexSet(values->begin(), values->end());
}

int run_solve(const Options& o, std::ostream& out, std::istream& in) {
  const Instance inst = load(o, in);
  const CapacityRule rule = parse_rule(o.rule);
  check_rule_applicable(inst.graph(), rule);
  SolveOptions options;
  options.brute_force_limit = o.limit;
  const bool brute = o.method == "brute" || (o.method == "auto" && inst.order() <= std::min(o.limit, 64));
  out << to_json(brute ? solve_brute(inst, rule, options) : solve_bnb(inst, rule)) << '\n';
  return kOk;
}

int run_validate(const Options& o, std::ostream& out, std::istream& in) {
  const Instance inst = load(o, in);
  const CapacityRule rule = parse_rule(o.rule);
  check_rule_applicable(inst.graph(), rule);
  const VertexSet d = parse_csv_set(o.set);
  const Coverage cov = coverage_feasible(inst, rule, d);
  if (!cov.feasible) {
    out << to_json(cov) << '\n';
    return kNegative;
  }
  out << to_json(cov, is_minimal(inst, rule, d)) << '\n';
  return kOk;
}

int run_gen(const Options& o, std::ostream& out) {
  const Generated gen = generate(parse_family_spec(o.family));
  const FMode mode = parse_f_mode(o.f_modes.empty() ? "ones" : o.f_modes.front());
  out << serialize_instance(Instance(gen.graph, generate_f(gen.graph, mode)));
  return kOk;
}

int run_radius(const Options& o, std::ostream& out, std::istream& in) {
  const Instance inst = load(o, in);
  const VertexSet s = make_vertex_set(inst.graph(), parse_csv_set(o.subset));
  out << radius_json(s, restricted_radius(inst.graph(), s)) << '\n';
  return kOk;
}

int run_check(const Options& o, std::ostream& out, std::istream& in) {
  const auto ids = parse_theorem_list(o.theorems);
  SolveOptions options;
  options.brute_force_limit = o.limit;
  CorpusSummary summary;
  if (!o.input.empty()) {
    const Instance inst = load(o, in);
    summary = run_instances(ids, std::span(&inst, 1), options);
  } else {
    CorpusSpec spec{parse_family_spec(o.corpus), {}, o.trials, o.seed};
    for (const auto& m : o.f_modes.empty() ? std::vector<std::string>{"random:0"} : o.f_modes)
      spec.f_modes.push_back(parse_f_mode(m));
    summary = run_corpus(ids, spec, options);
  }
  if (!o.counterexample_dir.empty()) {
    std::filesystem::create_directories(o.counterexample_dir);
    for (const auto& cx : summary.counterexamples) {
      const auto path = std::filesystem::path(o.counterexample_dir) /
                        (std::string(to_string(cx.report.id)) + "-" + cx.report.digest + ".drd");
      std::ofstream(path, std::ios::binary) << counterexample_file(cx);
    }
  }
  out << to_json(summary) << '\n';
  return summary.failures() == 0 ? kOk : kNegative;
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Degree restricted domination solver", "drd"};
  app.require_subcommand(1);
  Options o;

  auto add_rule = [&](CLI::App* cmd) {
    cmd->add_option("--rule", o.rule, "ceil | floor | translate | classic | kpart:<k>")->capture_default_str();
  };
  auto add_input = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--input", o.input, "instance file, '-' for stdin");
    if (required) opt->required();
  };
  auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--limit", o.limit, "largest order handled by exhaustive search")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "minimum DRD set");
  add_rule(solve);
  add_input(solve, true);
  add_limit(solve);
  solve->add_option("--method", o.method, "auto | brute | bnb")
      ->check(CLI::IsMember({"auto", "brute", "bnb"}))
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "check a candidate DRD set");
  add_rule(validate);
  add_input(validate, true);
  validate->add_option("--set", o.set, "comma separated vertices")->required();

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("family", o.family, "family spec, e.g. caterpillar:1,2,1")->required();
  gen->add_option("--f", o.f_modes, "ones | degrees | random:<seed> | explicit:<k1>,...")->expected(1);

  auto* radius = app.add_subcommand("radius", "restricted radius of a vertex subset");
  add_input(radius, true);
  radius->add_option("--subset", o.subset, "comma separated vertices")->required();

  auto* check = app.add_subcommand("check", "check theorems against brute-force ground truth");
  check->add_option("--theorems", o.theorems, "comma separated ids or 'all'")->required();
  auto* corpus = check->add_option("--corpus", o.corpus, "family spec generating the corpus");
  add_input(check, false);
  check->add_option("--trials", o.trials, "instances per f mode")->capture_default_str()->check(CLI::NonNegativeNumber);
  check->add_option("--seed", o.seed, "corpus seed")->capture_default_str();
  check->add_option("--f", o.f_modes, "f modes (repeatable)")->take_all();
  check->add_option("--counterexample-dir", o.counterexample_dir, "write one replayable file per failure");
  add_limit(check);
  corpus->excludes(check->get_option("--input"));

  std::vector<std::string> argv_storage{"drd"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return run_solve(o, out, in);
    if (*validate) return run_validate(o, out, in);
    if (*gen) return run_gen(o, out);
    if (*radius) return run_radius(o, out, in);
    if (*check) {
      if (o.input.empty() && o.corpus.empty()) {
        err << "check: one of --corpus or --input is required\n";
        return kUsage;
      }
      return run_check(o, out, in);
    }
  } catch (const Error& e) {
    err << "drd: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "drd: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace drd::cli
