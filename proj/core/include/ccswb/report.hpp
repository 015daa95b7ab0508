#pragma once

// Run reports and the eq / mc verbs as library calls, shared by the
// command-line front end and corpus manifest verification.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ccswb/ast.hpp"
#include "ccswb/equivalence.hpp"
#include "ccswb/formula.hpp"
#include "ccswb/semantics.hpp"

namespace ccswb {

enum class Verdict { Holds, Fails, Equivalent, Inequivalent, Ok };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

// 0 for holds/equivalent/ok, 1 for fails/inequivalent.
int exit_code(Verdict v);

struct RunReport {
  std::string command;
  Verdict verdict = Verdict::Ok;
  std::optional<std::string> witness;
  std::optional<std::size_t> states_a;
  std::optional<std::size_t> states_b;
  std::int64_t elapsed_ms = 0;
};

// One JSON object, fields in declaration order, absent optionals omitted.
std::string to_json(const RunReport& report);

struct EquivalenceRun {
  RunReport report;
  EqVerdict verdict;
};

struct ModelCheckRun {
  RunReport report;
  // Realizing label sequence when the formula holds and is a diamond formula.
  std::optional<Trace> realized_by;
};

// Errors propagate as exceptions: UnknownProcessError,
// UnguardedRecursionError, TruncatedLtsError, FormulaError.
EquivalenceRun run_equivalence(const Model& model, std::string_view lhs, std::string_view rhs,
                               const ExploreLimits& limits = {});
ModelCheckRun run_model_check(const Model& model, std::string_view process,
                              const Formula& formula, const ExploreLimits& limits = {});

}  // namespace ccswb
