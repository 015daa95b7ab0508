#include "ccswb/logic.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ccswb/errors.hpp"
#include "overloaded.hpp"

namespace ccswb {

using detail::overloaded;

std::size_t StateSet::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

StateSet StateSet::complement() const {
  StateSet out(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
  return out;
}

StateSet StateSet::operator&(const StateSet& other) const {
  StateSet out(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] && other.bits_[i];
  return out;
}

StateSet StateSet::operator|(const StateSet& other) const {
  StateSet out(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] || other.bits_[i];
  return out;
}

bool StateSet::subset_of(const StateSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

std::vector<StateId> StateSet::members() const {
  std::vector<StateId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<StateId>(i));
  return out;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Lts& lts, EvalStats* stats) : lts_(lts), stats_(stats) {
    if (lts.truncated()) throw TruncatedLtsError("cannot model-check a truncated LTS");
    tau_preds_.resize(lts.state_count());
    for (const auto& t : lts.transitions())
      if (t.label.is_tau()) tau_preds_[t.target].push_back(t.source);
  }

  StateSet eval(const Formula& f) {
    const std::size_t n = lts_.state_count();
    return std::visit(
        overloaded{
            [&](const Tt&) { return StateSet::all(n); },
            [&](const Ff&) { return StateSet::none(n); },
            [&](const And& a) { return eval(a.lhs) & eval(a.rhs); },
            [&](const Or& o) { return eval(o.lhs) | eval(o.rhs); },
            [&](const Modal& m) {
              StateSet body = eval(m.body);
              switch (m.modality) {
                case Modality::DiamondStrong: return diamond(m.pattern, body);
                case Modality::BoxStrong: return diamond(m.pattern, body.complement()).complement();
                case Modality::DiamondWeak: return weak_diamond(m.pattern, body);
                case Modality::BoxWeak:
                  return weak_diamond(m.pattern, body.complement()).complement();
              }
              return StateSet::none(n);
            },
            [&](const FixVar& v) {
              for (auto it = env_.rbegin(); it != env_.rend(); ++it)
                if (it->first == v.name) return it->second;
              throw FormulaError("unbound fixpoint variable '" + v.name + "'");
            },
            [&](const Fix& fx) {
              StateSet current = fx.kind == FixKind::Least ? StateSet::none(n) : StateSet::all(n);
              std::size_t rounds = 0;
              for (;;) {
                env_.emplace_back(fx.var, current);
                StateSet next = eval(fx.body);
                env_.pop_back();
                ++rounds;
                if (next == current) break;
                current = std::move(next);
              }
              if (stats_ != nullptr) {
                stats_->max_fixpoint_rounds = std::max(stats_->max_fixpoint_rounds, rounds);
                stats_->fixpoint_iterations += rounds;
              }
              return current;
            },
        },
        f.node().v);
  }

  // States with a one-step transition matching `p` into `target`.
  StateSet diamond(const LabelPattern& p, const StateSet& target) const {
    StateSet out(lts_.state_count());
    for (const auto& t : lts_.transitions())
      if (target.contains(t.target) && p.matches(t.label)) out.insert(t.source);
    return out;
  }

  // States that reach `target` by zero or more tau steps.
  StateSet tau_backward(const StateSet& target) const {
    StateSet out = target;
    std::vector<StateId> work = target.members();
    while (!work.empty()) {
      StateId s = work.back();
      work.pop_back();
      for (StateId pred : tau_preds_[s]) {
        if (!out.contains(pred)) {
          out.insert(pred);
          work.push_back(pred);
        }
      }
    }
    return out;
  }

  StateSet weak_diamond(const LabelPattern& p, const StateSet& target) const {
    return tau_backward(diamond(p, tau_backward(target)));
  }

 private:
  const Lts& lts_;
  EvalStats* stats_;
  std::vector<std::vector<StateId>> tau_preds_;
  std::vector<std::pair<std::string, StateSet>> env_;
};

bool shorter(const Trace& a, const Trace& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class WitnessFinder {
 public:
  explicit WitnessFinder(const Lts& lts) : lts_(lts), eval_(lts, nullptr) {}

  const StateSet& sat(const Formula& f) {
    auto it = sat_.find(f.id());
    if (it == sat_.end()) it = sat_.emplace(f.id(), eval_.eval(f)).first;
    return it->second;
  }

  // Precondition: s satisfies f.
  Trace find(StateId s, const Formula& f) {
    auto key = std::make_pair(f.id(), s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Trace result = std::visit(
        overloaded{
            [&](const Tt&) { return Trace{}; },
            [&](const And& a) {
              Trace l = find(s, a.lhs);
              Trace r = find(s, a.rhs);
              return r.size() > l.size() ? r : l;
            },
            [&](const Or& o) {
              std::optional<Trace> best;
              for (const Formula* g : {&o.lhs, &o.rhs}) {
                if (!sat(*g).contains(s)) continue;
                Trace w = find(s, *g);
                if (!best || shorter(w, *best)) best = std::move(w);
              }
              return *best;
            },
            [&](const Modal& m) {
              return m.modality == Modality::DiamondStrong ? strong_step(s, m) : weak_step(s, m);
            },
            [&](const auto&) -> Trace { throw FormulaError("formula outside the existential fragment"); },
        },
        f.node().v);
    memo_.emplace(key, result);
    return result;
  }

 private:
  Trace strong_step(StateId s, const Modal& m) {
    const StateSet& body = sat(m.body);
    std::optional<Trace> best;
    for (const auto& t : lts_.outgoing(s)) {
      if (!m.pattern.matches(t.label) || !body.contains(t.target)) continue;
      Trace w{t.label};
      Trace rest = find(t.target, m.body);
      w.insert(w.end(), rest.begin(), rest.end());
      if (!best || shorter(w, *best)) best = std::move(w);
    }
    return *best;
  }

  Trace weak_step(StateId s, const Modal& m) {
    const StateSet& body = sat(m.body);
    std::optional<Trace> best;
    for (StateId pre : tau_closure(lts_, std::span<const StateId>(&s, 1))) {
      for (const auto& t : lts_.outgoing(pre)) {
        if (!m.pattern.matches(t.label)) continue;
        for (StateId post : tau_closure(lts_, std::span<const StateId>(&t.target, 1))) {
          if (!body.contains(post)) continue;
          Trace w;
          if (!t.label.is_tau()) w.push_back(t.label);
          Trace rest = find(post, m.body);
          w.insert(w.end(), rest.begin(), rest.end());
          if (!best || shorter(w, *best)) best = std::move(w);
        }
      }
    }
    return *best;
  }

  const Lts& lts_;
  Evaluator eval_;
  std::map<const void*, StateSet> sat_;
  std::map<std::pair<const void*, StateId>, Trace> memo_;
};

}  // namespace

StateSet sat_states(const Lts& lts, const Formula& f, EvalStats* stats) {
  if (!is_closed(f)) throw FormulaError("formula has unbound fixpoint variables");
  return Evaluator(lts, stats).eval(f);
}

bool check(const Lts& lts, const Formula& f) {
  return sat_states(lts, f).contains(lts.initial());
}

std::optional<Trace> diamond_witness(const Lts& lts, const Formula& f) {
  if (!is_existential(f)) throw FormulaError("witnesses are only produced for diamond formulas");
  WitnessFinder finder(lts);
  if (!finder.sat(f).contains(lts.initial())) return std::nullopt;
  return finder.find(lts.initial(), f);
}

}  // namespace ccswb
