#include "ccswb/report.hpp"

#include <chrono>

#include <json.hpp>

#include "ccswb/errors.hpp"
#include "ccswb/logic.hpp"

namespace ccswb {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Equivalent: return "equivalent";
    case Verdict::Inequivalent: return "inequivalent";
    case Verdict::Ok: return "ok";
  }
  return "ok";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::Holds, Verdict::Fails, Verdict::Equivalent, Verdict::Inequivalent,
                    Verdict::Ok}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

int exit_code(Verdict v) { return v == Verdict::Fails || v == Verdict::Inequivalent ? 1 : 0; }

std::string to_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["verdict"] = std::string(to_string(report.verdict));
  if (report.witness) j["witness"] = *report.witness;
  if (report.states_a) j["states_a"] = *report.states_a;
  if (report.states_b) j["states_b"] = *report.states_b;
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require_complete(const Lts& lts, std::string_view name, const ExploreLimits& limits) {
  if (lts.truncated())
    throw TruncatedLtsError("state limit of " + std::to_string(limits.max_states) +
                            " reached while exploring '" + std::string(name) + "'");
}

}  // namespace

EquivalenceRun run_equivalence(const Model& model, std::string_view lhs, std::string_view rhs,
                               const ExploreLimits& limits) {
  const auto start = Clock::now();
  const Lts a = build_lts(model, lhs, limits);
  require_complete(a, lhs, limits);
  const Lts b = build_lts(model, rhs, limits);
  require_complete(b, rhs, limits);

  EquivalenceRun run;
  run.verdict = trace_equivalent(a, b);
  run.report.command = "eq";
  run.report.verdict = run.verdict.equivalent ? Verdict::Equivalent : Verdict::Inequivalent;
  if (run.verdict.witness) run.report.witness = render_trace(*run.verdict.witness);
  run.report.states_a = a.state_count();
  run.report.states_b = b.state_count();
  run.report.elapsed_ms = millis_since(start);
  return run;
}

ModelCheckRun run_model_check(const Model& model, std::string_view process,
                              const Formula& formula, const ExploreLimits& limits) {
  const auto start = Clock::now();
  const Lts lts = build_lts(model, process, limits);
  require_complete(lts, process, limits);

  ModelCheckRun run;
  const bool holds = check(lts, formula);
  run.report.command = "mc";
  run.report.verdict = holds ? Verdict::Holds : Verdict::Fails;
  run.report.states_a = lts.state_count();
  if (holds && is_existential(formula)) run.realized_by = diamond_witness(lts, formula);
  run.report.elapsed_ms = millis_since(start);
  return run;
}

}  // namespace ccswb
