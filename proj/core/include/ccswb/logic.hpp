#pragma once

// Modal mu-calculus model checking over a finite LTS by Kleene iteration.

#include <cstddef>
#include <optional>
#include <vector>

#include "ccswb/equivalence.hpp"
#include "ccswb/formula.hpp"
#include "ccswb/semantics.hpp"

namespace ccswb {

// Dense set of Lts state indices.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe, bool full = false) : bits_(universe, full) {}

  static StateSet all(std::size_t universe) { return StateSet(universe, true); }
  static StateSet none(std::size_t universe) { return StateSet(universe, false); }

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(StateId s) const { return bits_[s]; }
  void insert(StateId s) { bits_[s] = true; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  StateSet complement() const;
  StateSet operator&(const StateSet& other) const;
  StateSet operator|(const StateSet& other) const;
  bool subset_of(const StateSet& other) const;
  std::vector<StateId> members() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  std::vector<bool> bits_;
};

struct EvalStats {
  // Largest number of body evaluations any single fixpoint needed to stabilize.
  std::size_t max_fixpoint_rounds = 0;
  std::size_t fixpoint_iterations = 0;
};

// Throws TruncatedLtsError for truncated input and FormulaError for open formulas.
StateSet sat_states(const Lts& lts, const Formula& f, EvalStats* stats = nullptr);

bool check(const Lts& lts, const Formula& f);

// For formulas in the existential fragment (tt, &&, ||, strong and weak
// diamonds): a shortest label sequence realizing the diamonds from the
// initial state, earliest under the label order among equals. Strong steps
// keep their labels (including tau); weak steps drop the tau moves. For a
// conjunction the longer of the two conjunct witnesses is reported.
// Returns nullopt when the formula does not hold. Throws FormulaError for
// formulas outside the fragment.
std::optional<Trace> diamond_witness(const Lts& lts, const Formula& f);

}  // namespace ccswb
