#include "ccswb/semantics.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "ccswb/errors.hpp"
#include "overloaded.hpp"

namespace ccswb {

using detail::overloaded;

Lts::Lts(std::vector<Process> states, std::vector<std::string> keys, StateId initial,
         std::vector<Transition> transitions, bool truncated)
    : states_(std::move(states)),
      keys_(std::move(keys)),
      initial_(initial),
      transitions_(std::move(transitions)) {
  if (keys_.size() != states_.size()) throw Error("lts: key table does not match state table");
  if (initial_ >= states_.size()) throw Error("lts: initial state out of range");
  for (const auto& t : transitions_) {
    if (t.source >= states_.size() || t.target >= states_.size())
      throw Error("lts: transition endpoint out of range");
  }
  std::stable_sort(transitions_.begin(), transitions_.end(),
                   [](const Transition& a, const Transition& b) { return a.source < b.source; });
  offsets_.assign(states_.size() + 1, 0);
  for (const auto& t : transitions_) ++offsets_[t.source + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  stats_.states_explored = states_.size();
  stats_.transitions_count = transitions_.size();
  stats_.truncated = truncated;
}

Lts Lts::synthetic(std::size_t state_count, StateId initial, std::vector<Transition> transitions) {
  std::vector<Process> states(state_count);
  std::vector<std::string> keys;
  keys.reserve(state_count);
  for (std::size_t i = 0; i < state_count; ++i) keys.push_back("#" + std::to_string(i));
  return Lts(std::move(states), std::move(keys), initial, std::move(transitions));
}

namespace {

class Deriver {
 public:
  Deriver(const Model& defs, std::size_t max_unfold) : defs_(defs), max_unfold_(max_unfold) {}

  void derive(const Process& p, std::size_t unfolds, std::vector<Move>& out) const {
    std::visit(
        overloaded{
            [&](const Nil&) {},
            [&](const Seq& s) { derive_prefix(s, out); },
            [&](const Choice& c) {
              derive(c.lhs, unfolds, out);
              derive(c.rhs, unfolds, out);
            },
            [&](const Par& par) {
              std::vector<Move> left;
              std::vector<Move> right;
              derive(par.lhs, unfolds, left);
              derive(par.rhs, unfolds, right);
              for (const auto& [label, target] : left)
                out.emplace_back(label, Process::par(target, par.rhs));
              for (const auto& [label, target] : right)
                out.emplace_back(label, Process::par(par.lhs, target));
              for (const auto& [l, lt] : left) {
                if (l.is_tau()) continue;
                for (const auto& [r, rt] : right) {
                  if (r.is_tau() || l.polarity == r.polarity) continue;
                  if (l.action == r.action && l.args == r.args)
                    out.emplace_back(GroundLabel::tau(), Process::par(lt, rt));
                }
              }
            },
            [&](const Restrict& r) {
              std::vector<Move> inner;
              derive(r.body, unfolds, inner);
              for (auto& [label, target] : inner) {
                if (!label.is_tau() &&
                    std::binary_search(r.names.begin(), r.names.end(), label.action))
                  continue;
                out.emplace_back(std::move(label), Process::restrict(std::move(target), r.names));
              }
            },
            [&](const Cond& c) {
              derive(eval_bool(c.test) ? c.then_branch : c.else_branch, unfolds, out);
            },
            [&](const Call& c) {
              if (unfolds + 1 > max_unfold_)
                throw UnguardedRecursionError("unguarded recursion: '" + c.name + "' unfolded " +
                                              std::to_string(max_unfold_) +
                                              " times without performing an action");
              const Definition* def = defs_.find(c.name);
              if (def == nullptr) throw UnknownProcessError("unknown process '" + c.name + "'");
              if (def->params.size() != c.args.size())
                throw InternalError("arity mismatch calling '" + c.name + "'");
              Binding binding;
              for (std::size_t i = 0; i < c.args.size(); ++i)
                binding[def->params[i]] = eval_value(c.args[i]);
              derive(substitute(def->body, binding), unfolds + 1, out);
            },
        },
        p.node().v);
  }

 private:
  static void derive_prefix(const Seq& s, std::vector<Move>& out) {
    const Prefix& prefix = s.prefix;
    if (prefix.polarity == Polarity::Output) {
      std::vector<Value> values;
      values.reserve(prefix.args.size());
      for (const auto& a : prefix.args) values.push_back(eval_value(a));
      out.emplace_back(GroundLabel::output(prefix.action, std::move(values)), s.body);
      return;
    }
    const std::size_t k = prefix.binders.size();
    // Tuples in numeric order: bit i of `code` (most significant first) is binder i.
    for (std::size_t code = 0; code < (std::size_t{1} << k); ++code) {
      std::vector<Value> values(k);
      Binding binding;
      for (std::size_t i = 0; i < k; ++i) {
        values[i] = ((code >> (k - 1 - i)) & 1U) != 0 ? Value::One : Value::Zero;
        binding[prefix.binders[i]] = values[i];
      }
      out.emplace_back(GroundLabel::input(prefix.action, std::move(values)),
                       substitute(s.body, binding));
    }
  }

  const Model& defs_;
  std::size_t max_unfold_;
};

void append_value(std::string& out, const ValueExpr& e) {
  if (e.is_literal()) {
    out += to_char(e.value());
  } else {
    out += '$';
    out += e.name();
  }
}

template <class Node>
void collect_operands(const Process& p, std::vector<const Process*>& out) {
  if (const auto* n = std::get_if<Node>(&p.node().v)) {
    collect_operands<Node>(n->lhs, out);
    collect_operands<Node>(n->rhs, out);
  } else {
    out.push_back(&p);
  }
}

void write_key(const Process& p, std::string& out);

template <class Node>
void write_flattened(const Process& p, char op, std::string& out) {
  std::vector<const Process*> operands;
  collect_operands<Node>(p, operands);
  std::vector<std::string> keys;
  keys.reserve(operands.size());
  for (const auto* operand : operands) {
    std::string k;
    write_key(*operand, k);
    keys.push_back(std::move(k));
  }
  std::sort(keys.begin(), keys.end());
  out += op;
  out += '[';
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i != 0) out += ',';
    out += keys[i];
  }
  out += ']';
}

void write_key(const Process& p, std::string& out) {
  std::visit(overloaded{
                 [&](const Nil&) { out += '0'; },
                 [&](const Seq& s) {
                   if (s.prefix.polarity == Polarity::Output) out += '\'';
                   out += s.prefix.action;
                   out += '(';
                   if (s.prefix.polarity == Polarity::Output) {
                     for (const auto& a : s.prefix.args) {
                       append_value(out, a);
                       out += ',';
                     }
                   } else {
                     for (const auto& b : s.prefix.binders) {
                       out += b;
                       out += ',';
                     }
                   }
                   out += ").(";
                   write_key(s.body, out);
                   out += ')';
                 },
                 [&](const Choice&) { write_flattened<Choice>(p, '+', out); },
                 [&](const Par&) { write_flattened<Par>(p, '|', out); },
                 [&](const Restrict& r) {
                   out += "\\{";
                   for (const auto& n : r.names) {
                     out += n;
                     out += ',';
                   }
                   out += "}(";
                   write_key(r.body, out);
                   out += ')';
                 },
                 [&](const Cond& c) {
                   out += "if(";
                   append_value(out, c.test.lhs);
                   out += c.test.op == CompareOp::Eq ? "=" : "!=";
                   append_value(out, c.test.rhs);
                   out += ")(";
                   write_key(c.then_branch, out);
                   out += ")(";
                   write_key(c.else_branch, out);
                   out += ')';
                 },
                 [&](const Call& c) {
                   out += c.name;
                   out += '(';
                   for (const auto& a : c.args) {
                     append_value(out, a);
                     out += ',';
                   }
                   out += ')';
                 },
             },
             p.node().v);
}

std::vector<Move> dedup_moves(std::vector<Move> moves, std::vector<std::string>* keys_out) {
  std::set<std::pair<GroundLabel, std::string>> seen;
  std::vector<Move> out;
  out.reserve(moves.size());
  for (auto& move : moves) {
    std::string key = canonical_key(move.second);
    if (!seen.emplace(move.first, key).second) continue;
    out.push_back(std::move(move));
    if (keys_out != nullptr) keys_out->push_back(std::move(key));
  }
  return out;
}

}  // namespace

std::string canonical_key(const Process& state) {
  std::string out;
  write_key(state, out);
  return out;
}

std::vector<Move> ground_transitions(const Process& state, const Model& defs,
                                     std::size_t max_unfold_without_prefix) {
  if (!is_ground(state)) throw InternalError("ground_transitions: state has free variables");
  std::vector<Move> moves;
  Deriver(defs, max_unfold_without_prefix).derive(state, 0, moves);
  return dedup_moves(std::move(moves), nullptr);
}

Lts build_lts(const Model& defs, std::string_view root, const ExploreLimits& limits) {
  if (limits.max_states == 0 || limits.max_unfold_without_prefix == 0)
    throw Error("exploration limits must be positive");
  const Definition* def = defs.find(root);
  if (def == nullptr) throw UnknownProcessError("unknown process '" + std::string(root) + "'");
  if (!def->params.empty())
    throw UnknownProcessError("process '" + std::string(root) + "' takes parameters");

  const Deriver deriver(defs, limits.max_unfold_without_prefix);
  std::vector<Process> states;
  std::vector<std::string> keys;
  std::unordered_map<std::string, StateId> index;
  std::vector<Transition> transitions;
  bool truncated = false;

  Process init = Process::call(std::string(root));
  keys.push_back(canonical_key(init));
  index.emplace(keys.back(), 0);
  states.push_back(std::move(init));

  for (StateId current = 0; current < states.size(); ++current) {
    std::vector<Move> raw;
    deriver.derive(states[current], 0, raw);
    std::vector<std::string> move_keys;
    std::vector<Move> moves = dedup_moves(std::move(raw), &move_keys);
    for (std::size_t i = 0; i < moves.size(); ++i) {
      auto it = index.find(move_keys[i]);
      StateId target;
      if (it != index.end()) {
        target = it->second;
      } else {
        if (states.size() >= limits.max_states) {
          truncated = true;
          continue;
        }
        target = static_cast<StateId>(states.size());
        index.emplace(move_keys[i], target);
        keys.push_back(std::move(move_keys[i]));
        states.push_back(std::move(moves[i].second));
      }
      transitions.push_back({current, std::move(moves[i].first), target});
    }
  }
  return Lts(std::move(states), std::move(keys), 0, std::move(transitions), truncated);
}

std::string to_dot(const Lts& lts) {
  std::string out = "digraph lts {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t s = 0; s < lts.state_count(); ++s) {
    out += "  s" + std::to_string(s) + " [label=\"" + std::to_string(s) + "\"";
    if (s == lts.initial()) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (const auto& t : lts.transitions()) {
    out += "  s" + std::to_string(t.source) + " -> s" + std::to_string(t.target) +
           " [label=\"" + to_string(t.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ccswb
