#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "debate/apx.hpp"
#include "debate/bench.hpp"
#include "debate/checker.hpp"
#include "debate/dispute.hpp"
#include "debate/formula.hpp"
#include "debate/interpreted_system.hpp"
#include "debate/semantics.hpp"

using namespace debate;

namespace {

enum Exit : int { kTrue = 0, kFalse = 1, kUsage = 2, kBudget = 3, kInput = 4 };

/// File-system and parse failures; always exit 4.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad flag combinations found after parsing; always exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ArgumentationFramework load(const std::string& path) {
  try {
    return load_apx(path);
  } catch (const ApxError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << body)) throw InputError("cannot write '" + path + "'");
}

ArgId argument(const ArgumentationFramework& af, const std::string& name) {
  if (!af.contains(name)) throw UsageError("unknown argument '" + name + "'");
  return af.id(name);
}

SemanticsKind semantics(const std::string& name) {
  const auto k = parse_semantics(name);
  if (!k) throw UsageError("unknown semantics '" + name + "'");
  return *k;
}

StateSpace space_of(const std::string& name) {
  return name == "full" ? StateSpace::Full : StateSpace::Collapsed;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

struct SolveOptions {
  std::string af;
  std::string semantics;
  std::string arg;
  bool all = false;
};

int run_solve(const SolveOptions& o) {
  const SemanticsKind kind = semantics(o.semantics);
  const auto af = load(o.af);
  if (!o.arg.empty()) {
    const bool yes = accepted(af, argument(af, o.arg), kind);
    std::cout << "accepted=" << (yes ? "true" : "false") << "\n";
    return yes ? kTrue : kFalse;
  }
  const bool unique = kind == SemanticsKind::Grounded || kind == SemanticsKind::Ideal;
  if (unique && !o.all) {
    const Extension e = kind == SemanticsKind::Grounded ? grounded_extension(af)
                                                        : extensions(af, kind).front();
    std::cout << format_extension(af, e) << "\n";
  } else {
    std::cout << format_extensions(af, extensions(af, kind)) << "\n";
  }
  return kTrue;
}

struct TranslateOptions {
  std::string af;
  std::string root;
  std::string out;
  std::string space = "full";
  std::size_t max_states = 4'000'000;
};

int run_translate(const TranslateOptions& o) {
  const auto af = load(o.af);
  const auto is =
      build_interpreted_system(af, argument(af, o.root), {space_of(o.space), o.max_states});
  write_output(o.out, format_listing(is));
  return kTrue;
}

struct CheckOptions {
  std::string af;
  std::string root;
  std::string semantics;
  std::string engine = "sl";
  std::string formula_file;
  std::string space = "collapsed";
  double timeout = 1800.0;
  std::size_t max_states = 4'000'000;
  bool witness = false;
};

int run_check(const CheckOptions& o) {
  if (o.semantics.empty() == o.formula_file.empty()) {
    throw UsageError("give exactly one of SEMANTICS or --formula-file");
  }
  std::optional<SemanticsKind> kind;
  if (!o.semantics.empty()) {
    kind = semantics(o.semantics);
    if (*kind != SemanticsKind::Grounded && *kind != SemanticsKind::Admissible &&
        *kind != SemanticsKind::Ideal) {
      throw UsageError("check supports grounded, admissible and ideal");
    }
  }
  if (o.engine == "fixpoint" && kind != SemanticsKind::Grounded) {
    throw UsageError("the fixpoint engine only decides grounded");
  }
  const auto af = load(o.af);
  const ArgId root = argument(af, o.root);
  FormulaPtr f;
  if (!o.formula_file.empty()) {
    try {
      f = parse_formula(read_file(o.formula_file), af);
    } catch (const FormulaSyntaxError& e) {
      throw InputError(o.formula_file + ": " + e.what());
    } catch (const UnknownArgument& e) {
      throw InputError(o.formula_file + ": " + e.what());
    }
    if (!is_sentence(*f)) throw InputError(o.formula_file + ": formula has free strategy variables");
  } else {
    f = *kind == SemanticsKind::Grounded     ? grounded_formula(af)
        : *kind == SemanticsKind::Admissible ? admissible_formula(af)
                                             : ideal_formula(af);
  }

  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  std::optional<InterpretedSystem> is;
  try {
    is.emplace(build_interpreted_system(af, root, {space_of(o.space), o.max_states}));
  } catch (const ResourceError& e) {
    std::cerr << "debatemc: " << e.what() << "\n";
    v.result = CheckResult::ResourceExceeded;
    v.reach_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  if (is) {
    if (o.engine == "fixpoint") {
      v = check_grounded_fixpoint(*is);
    } else {
      Budget budget;
      budget.wall_seconds = std::max(0.0, o.timeout - is->build_seconds());
      v = check(*is, f, budget);
    }
  }
  std::cout << "result=" << to_string(v.result) << " reach_s=" << seconds(v.reach_s)
            << " mc_s=" << seconds(v.mc_s) << "\n";
  if (o.witness && v.witness && is && kind) {
    std::cout << format_strategy(af, to_proponent_strategy(*is, *v.witness));
  }
  switch (v.result) {
    case CheckResult::True: return kTrue;
    case CheckResult::False: return kFalse;
    default: return kBudget;
  }
}

struct BenchOptions {
  std::string config;
  std::string out;
};

int run_bench_command(const BenchOptions& o) {
  BenchConfig cfg;
  try {
    cfg = parse_bench_config(read_file(o.config));
  } catch (const std::invalid_argument& e) {
    throw InputError(o.config + ": " + e.what());
  }
  const auto records = run_bench(cfg);
  try {
    write_bench_outputs(o.out, records);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  std::cout << summary_markdown(summarize(records));
  const std::size_t bad = count_disagreements(records);
  std::cout << "disagreements=" << bad << "\n";
  return bad == 0 ? kTrue : kFalse;
}

struct GenOptions {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& o) {
  write_output(o.out, emit_apx(generate_random(o.n, o.p, o.seed)));
  return kTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Debate verifier for abstract argumentation frameworks"};
  app.set_version_flag("--version", std::string("debatemc ") + DEBATE_VERSION);
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Extensions or acceptance under a semantics");
  solve_cmd->add_option("af", solve.af, "Framework in apx syntax")->required();
  solve_cmd->add_option("semantics", solve.semantics,
                        "conflict-free | admissible | complete | grounded | preferred | ideal")
      ->required();
  solve_cmd->add_option("--arg", solve.arg, "Decide acceptance of one argument (exit 0/1)");
  solve_cmd->add_flag("--all", solve.all, "Print the family of extensions even when unique");

  TranslateOptions translate;
  auto* translate_cmd = app.add_subcommand("translate", "List the interpreted system of a debate");
  translate_cmd->add_option("af", translate.af, "Framework in apx syntax")->required();
  translate_cmd->add_option("root", translate.root, "Argument under debate")->required();
  translate_cmd->add_option("--out", translate.out, "Write the listing here instead of stdout");
  translate_cmd->add_option("--state-space", translate.space, "full | collapsed")
      ->check(CLI::IsMember({"full", "collapsed"}))
      ->capture_default_str();
  translate_cmd->add_option("--max-states", translate.max_states, "Reachable state cap")
      ->capture_default_str();

  CheckOptions chk;
  auto* check_cmd = app.add_subcommand("check", "Model-check a winning-strategy formula");
  check_cmd->add_option("af", chk.af, "Framework in apx syntax")->required();
  check_cmd->add_option("root", chk.root, "Argument under debate")->required();
  check_cmd->add_option("semantics", chk.semantics, "grounded | admissible | ideal");
  check_cmd->add_option("--engine", chk.engine, "sl | fixpoint")
      ->check(CLI::IsMember({"sl", "fixpoint"}))
      ->capture_default_str();
  check_cmd->add_option("--timeout", chk.timeout, "Wall-clock budget in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check_cmd->add_flag("--witness", chk.witness, "Print the Pro strategy as reply lines");
  check_cmd->add_option("--formula-file", chk.formula_file, "Check this sentence instead");
  check_cmd->add_option("--state-space", chk.space, "full | collapsed")
      ->check(CLI::IsMember({"full", "collapsed"}))
      ->capture_default_str();
  check_cmd->add_option("--max-states", chk.max_states, "Reachable state cap")
      ->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark configuration");
  bench_cmd->add_option("--config", bench.config, "key = value configuration file")->required();
  bench_cmd->add_option("--out", bench.out, "Output directory")->required();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random framework");
  gen_cmd->add_option("n", gen.n, "Number of arguments")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("p", gen.p, "Attack probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", gen.out, "Write the framework here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*translate_cmd) return run_translate(translate);
    if (*check_cmd) return run_check(chk);
    if (*bench_cmd) return run_bench_command(bench);
    if (*gen_cmd) return run_gen(gen);
  } catch (const UsageError& e) {
    std::cerr << "debatemc: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "debatemc: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceError& e) {
    std::cerr << "debatemc: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "debatemc: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}
