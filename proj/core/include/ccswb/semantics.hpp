#pragma once

// Structural operational semantics of the dialect and finite LTS
// construction by breadth-first exploration with state canonicalization.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccswb/ast.hpp"

namespace ccswb {

using StateId = std::uint32_t;

struct ExploreLimits {
  std::size_t max_states = 100000;
  // Bound on constant unfoldings along one derivation that consumes no prefix.
  std::size_t max_unfold_without_prefix = 1000;
};

struct Transition {
  StateId source;
  GroundLabel label;
  StateId target;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct LtsStats {
  std::size_t states_explored = 0;
  std::size_t transitions_count = 0;
  bool truncated = false;
};

// Finite labeled transition system. Immutable after construction; transitions
// are kept grouped by source state in insertion order.
class Lts {
 public:
  // Throws ccswb::Error if `initial` or any endpoint is out of range, or if
  // `keys` and `states` differ in length.
  Lts(std::vector<Process> states, std::vector<std::string> keys, StateId initial,
      std::vector<Transition> transitions, bool truncated = false);

  // Hand-built LTS over anonymous states (all terms are 0); used by tests and
  // benchmarks that need shapes the language cannot express directly.
  static Lts synthetic(std::size_t state_count, StateId initial,
                       std::vector<Transition> transitions);

  std::size_t state_count() const noexcept { return states_.size(); }
  StateId initial() const noexcept { return initial_; }
  const std::vector<Process>& states() const noexcept { return states_; }
  const std::vector<std::string>& keys() const noexcept { return keys_; }
  const std::vector<Transition>& transitions() const noexcept { return transitions_; }
  std::span<const Transition> outgoing(StateId s) const noexcept {
    return {transitions_.data() + offsets_[s], transitions_.data() + offsets_[s + 1]};
  }
  const LtsStats& stats() const noexcept { return stats_; }
  bool truncated() const noexcept { return stats_.truncated; }

 private:
  std::vector<Process> states_;
  std::vector<std::string> keys_;
  StateId initial_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> offsets_;
  LtsStats stats_;
};

using Move = std::pair<GroundLabel, Process>;

// All SOS-derivable successors of a ground term, deduplicated by
// (label, canonical key) and kept in derivation order. Inputs are expanded
// eagerly over every value tuple. Throws InternalError for non-ground terms
// and UnguardedRecursionError when constants unfold more than
// `max_unfold_without_prefix` times without a prefix being consumed.
std::vector<Move> ground_transitions(const Process& state, const Model& defs,
                                     std::size_t max_unfold_without_prefix = 1000);

// Serialization modulo associativity/commutativity of + and |.
std::string canonical_key(const Process& state);

// Throws UnknownProcessError when `root` is not a nullary definition.
// A truncated Lts (state cap hit) is returned, flagged in its stats.
Lts build_lts(const Model& defs, std::string_view root, const ExploreLimits& limits = {});

std::string to_dot(const Lts& lts);

}  // namespace ccswb
