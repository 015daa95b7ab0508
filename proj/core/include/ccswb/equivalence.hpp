#pragma once

// Weak trace equivalence via subset construction over visible labels.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "ccswb/semantics.hpp"

namespace ccswb {

using Trace = std::vector<GroundLabel>;

// Deterministic transition structure over tau-closed sets of Lts states.
struct Dts {
  std::vector<std::vector<StateId>> macro_states;  // each sorted
  std::size_t initial = 0;
  // Per macro-state, visible label -> successor, ordered by the label order.
  std::vector<std::map<GroundLabel, std::size_t>> transitions;

  std::size_t size() const noexcept { return macro_states.size(); }
};

enum class WitnessSide { First, Second };

struct EqVerdict {
  bool equivalent = true;
  std::optional<Trace> witness;
  // Which argument admits the witness (the other one rejects it).
  std::optional<WitnessSide> witness_side;
};

// Least superset of `seed` closed under tau steps, sorted.
std::vector<StateId> tau_closure(const Lts& lts, std::span<const StateId> seed);

// Throws TruncatedLtsError for truncated input.
Dts determinize(const Lts& lts);

// Shortest distinguishing trace on failure; ties go to the earliest label
// sequence under the label order. Throws TruncatedLtsError.
EqVerdict trace_equivalent(const Lts& a, const Lts& b);

// Every observable trace of length <= depth, by exhaustive run enumeration.
// Exponential in depth; meant for tests and small inspections.
std::set<Trace> bounded_traces(const Lts& lts, std::size_t depth);

}  // namespace ccswb
