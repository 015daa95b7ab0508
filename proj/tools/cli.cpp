#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "ccswb/corpus.hpp"
#include "ccswb/equivalence.hpp"
#include "ccswb/errors.hpp"
#include "ccswb/logic.hpp"
#include "ccswb/parser.hpp"
#include "ccswb/report.hpp"
#include "ccswb/semantics.hpp"

namespace ccswb::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  std::size_t max_states = ExploreLimits{}.max_states;
  bool json = false;
  std::string model;
  std::string lhs;
  std::string rhs;
  std::string formula;
  std::string formula_file;
  std::string dot_path;
  std::size_t depth = 0;
};

// A partial result was produced but the state cap cut exploration short.
struct Truncated {
  RunReport report;
};

Model load_model(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_model(text);
  } catch (const SourceError& e) {
    throw Error(path + ":" + e.what());
  }
}

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void emit(const Options& opts, const RunReport& report, const std::string& human,
          std::ostream& out) {
  if (opts.json) {
    out << to_json(report) << '\n';
  } else {
    out << human;
  }
}

int cmd_eq(const Options& opts, const ExploreLimits& limits, std::ostream& out) {
  const Model model = load_model(opts.model);
  EquivalenceRun run = run_equivalence(model, opts.lhs, opts.rhs, limits);
  std::string human = "eq " + opts.lhs + " " + opts.rhs + ": " +
                      std::string(to_string(run.report.verdict)) + "\n";
  human += "  states: " + std::to_string(*run.report.states_a) + " / " +
           std::to_string(*run.report.states_b) + "\n";
  if (run.report.witness) {
    const bool first = run.verdict.witness_side == WitnessSide::First;
    human += "  witness: " + *run.report.witness + "\n";
    human += "  (a trace of " + (first ? opts.lhs : opts.rhs) + " but not of " +
             (first ? opts.rhs : opts.lhs) + ")\n";
  }
  emit(opts, run.report, human, out);
  return exit_code(run.report.verdict);
}

int cmd_mc(const Options& opts, const ExploreLimits& limits, std::ostream& out) {
  if (opts.formula.empty() == opts.formula_file.empty())
    throw CLI::ValidationError("mc", "exactly one of --formula or --formula-file is required");
  const Model model = load_model(opts.model);
  const std::string text = opts.formula.empty() ? read_text_file(opts.formula_file) : opts.formula;
  const Formula formula = parse_formula(text);
  ModelCheckRun run = run_model_check(model, opts.lhs, formula, limits);
  std::string human = "mc " + opts.lhs + " " + print_formula(formula) + ": " +
                      std::string(to_string(run.report.verdict)) + "\n";
  human += "  states: " + std::to_string(*run.report.states_a) + "\n";
  if (run.realized_by) human += "  realized by: " + render_trace(*run.realized_by) + "\n";
  emit(opts, run.report, human, out);
  return exit_code(run.report.verdict);
}

int cmd_lts(const Options& opts, const ExploreLimits& limits, std::ostream& out) {
  const auto start = Clock::now();
  const Model model = load_model(opts.model);
  const Lts lts = build_lts(model, opts.lhs, limits);
  const std::string dot = to_dot(lts);
  if (opts.dot_path == "-") {
    out << dot;
  } else {
    std::ofstream file(opts.dot_path, std::ios::binary);
    if (!file) throw Error("cannot write '" + opts.dot_path + "'");
    file << dot;
  }
  RunReport report;
  report.command = "lts";
  report.states_a = lts.state_count();
  report.elapsed_ms = millis_since(start);
  if (opts.dot_path != "-" || opts.json) {
    emit(opts, report, "lts " + opts.lhs + ": " + std::to_string(lts.state_count()) +
                           " states, " + std::to_string(lts.transitions().size()) +
                           " transitions\n",
         out);
  }
  if (lts.truncated()) throw Truncated{report};
  return kSuccess;
}

int cmd_traces(const Options& opts, const ExploreLimits& limits, std::ostream& out) {
  const auto start = Clock::now();
  const Model model = load_model(opts.model);
  const Lts lts = build_lts(model, opts.lhs, limits);
  const auto traces = bounded_traces(lts, opts.depth);
  std::vector<Trace> ordered(traces.begin(), traces.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Trace& a, const Trace& b) { return a.size() < b.size(); });
  RunReport report;
  report.command = "traces";
  report.states_a = lts.state_count();
  report.elapsed_ms = millis_since(start);
  std::string human;
  for (const auto& t : ordered) human += (t.empty() ? std::string("<empty>") : render_trace(t)) + "\n";
  emit(opts, report, human, out);
  if (lts.truncated()) throw Truncated{report};
  return kSuccess;
}

int cmd_fmt(const Options& opts, std::ostream& out) {
  const auto start = Clock::now();
  const Model model = load_model(opts.model);
  RunReport report;
  report.command = "fmt";
  report.elapsed_ms = millis_since(start);
  emit(opts, report, print_model(model), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Value-passing CCS toolkit: LTS generation, trace equivalence, mu-calculus",
               "ccswb"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--max-states", opts.max_states, "State cap for LTS exploration")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opts.json, "Print a single JSON report object");

  auto* eq = app.add_subcommand("eq", "Decide weak trace equivalence of two processes");
  eq->add_option("MODEL", opts.model)->required();
  eq->add_option("P", opts.lhs)->required();
  eq->add_option("Q", opts.rhs)->required();

  auto* mc = app.add_subcommand("mc", "Check a mu-calculus formula against a process");
  mc->add_option("MODEL", opts.model)->required();
  mc->add_option("P", opts.lhs)->required();
  auto* formula = mc->add_option("--formula", opts.formula, "Formula text");
  auto* formula_file = mc->add_option("--formula-file", opts.formula_file, "File holding the formula");
  formula->excludes(formula_file);

  auto* lts = app.add_subcommand("lts", "Write the LTS of a process as GraphViz");
  lts->add_option("MODEL", opts.model)->required();
  lts->add_option("P", opts.lhs)->required();
  lts->add_option("--dot", opts.dot_path, "Output path ('-' for stdout)")->required();

  auto* traces = app.add_subcommand("traces", "List observable traces up to a depth");
  traces->add_option("MODEL", opts.model)->required();
  traces->add_option("P", opts.lhs)->required();
  traces->add_option("--depth", opts.depth, "Maximum trace length")->required();

  auto* fmt = app.add_subcommand("fmt", "Pretty-print a model in canonical form");
  fmt->add_option("MODEL", opts.model)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  ExploreLimits limits;
  limits.max_states = opts.max_states;
  try {
    if (eq->parsed()) return cmd_eq(opts, limits, out);
    if (mc->parsed()) return cmd_mc(opts, limits, out);
    if (lts->parsed()) return cmd_lts(opts, limits, out);
    if (traces->parsed()) return cmd_traces(opts, limits, out);
    if (fmt->parsed()) return cmd_fmt(opts, out);
  } catch (const Truncated&) {
    err << "error: state limit of " << limits.max_states << " reached; output is partial\n";
    return kLimitError;
  } catch (const TruncatedLtsError& e) {
    err << "error: " << e.what() << '\n';
    return kLimitError;
  } catch (const UnguardedRecursionError& e) {
    err << "error: " << e.what() << '\n';
    return kLimitError;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ccswb::cli
