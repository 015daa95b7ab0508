#include "ccswb/ast.hpp"

#include <algorithm>

#include "ccswb/errors.hpp"
#include "overloaded.hpp"

namespace ccswb {

using detail::overloaded;

SourceError::SourceError(std::size_t line, std::size_t column, std::string message,
                         std::vector<std::string> expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

Prefix Prefix::input(std::string action, std::vector<std::string> binders) {
  Prefix p;
  p.polarity = Polarity::Input;
  p.action = std::move(action);
  p.binders = std::move(binders);
  return p;
}

Prefix Prefix::output(std::string action, std::vector<ValueExpr> args) {
  Prefix p;
  p.polarity = Polarity::Output;
  p.action = std::move(action);
  p.args = std::move(args);
  return p;
}

namespace {

const std::shared_ptr<const ProcessNode>& nil_node() {
  static const auto node = std::make_shared<const ProcessNode>(ProcessNode{Nil{}});
  return node;
}

}  // namespace

Process::Process() : node_(nil_node()) {}

Process Process::nil() { return Process(); }

Process Process::prefix(Prefix prefix, Process body) {
  return Process(std::make_shared<const ProcessNode>(
      ProcessNode{Seq{std::move(prefix), std::move(body)}}));
}

Process Process::choice(Process lhs, Process rhs) {
  return Process(std::make_shared<const ProcessNode>(
      ProcessNode{Choice{std::move(lhs), std::move(rhs)}}));
}

Process Process::par(Process lhs, Process rhs) {
  return Process(
      std::make_shared<const ProcessNode>(ProcessNode{Par{std::move(lhs), std::move(rhs)}}));
}

Process Process::restrict(Process body, std::vector<std::string> names) {
  if (names.empty()) throw Error("restriction set must be nonempty");
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return Process(std::make_shared<const ProcessNode>(
      ProcessNode{Restrict{std::move(body), std::move(names)}}));
}

Process Process::cond(BoolExpr test, Process then_branch, Process else_branch) {
  return Process(std::make_shared<const ProcessNode>(
      ProcessNode{Cond{std::move(test), std::move(then_branch), std::move(else_branch)}}));
}

Process Process::call(std::string name, std::vector<ValueExpr> args) {
  return Process(std::make_shared<const ProcessNode>(
      ProcessNode{Call{std::move(name), std::move(args)}}));
}

bool operator==(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->v == b.node_->v;
}

void Model::add(Definition def) {
  if (index_.count(def.name) != 0) throw Error("duplicate definition '" + def.name + "'");
  index_.emplace(def.name, defs_.size());
  defs_.push_back(std::move(def));
}

const Definition* Model::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &defs_[it->second];
}

GroundLabel GroundLabel::input(std::string action, std::vector<Value> args) {
  return {LabelKind::Visible, Polarity::Input, std::move(action), std::move(args)};
}

GroundLabel GroundLabel::output(std::string action, std::vector<Value> args) {
  return {LabelKind::Visible, Polarity::Output, std::move(action), std::move(args)};
}

std::string to_string(const GroundLabel& label) {
  if (label.is_tau()) return "tau";
  std::string out;
  if (label.polarity == Polarity::Output) out += '\'';
  out += label.action;
  if (!label.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < label.args.size(); ++i) {
      if (i != 0) out += ',';
      out += to_char(label.args[i]);
    }
    out += ')';
  }
  return out;
}

std::string render_trace(const std::vector<GroundLabel>& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i != 0) out += '.';
    out += to_string(trace[i]);
  }
  return out;
}

namespace {

ValueExpr substitute_expr(const ValueExpr& e, const Binding& binding, bool& changed) {
  if (e.is_literal()) return e;
  auto it = binding.find(e.name());
  if (it == binding.end()) return e;
  changed = true;
  return ValueExpr::literal(it->second);
}

Process substitute_impl(const Process& term, const Binding& binding) {
  if (binding.empty()) return term;
  return std::visit(
      overloaded{
          [&](const Nil&) { return term; },
          [&](const Seq& s) {
            bool changed = false;
            Prefix prefix = s.prefix;
            Process body;
            if (prefix.polarity == Polarity::Output) {
              for (auto& a : prefix.args) a = substitute_expr(a, binding, changed);
              body = substitute_impl(s.body, binding);
            } else {
              bool shadows = std::any_of(prefix.binders.begin(), prefix.binders.end(),
                                         [&](const std::string& b) { return binding.count(b); });
              if (shadows) {
                Binding inner = binding;
                for (const auto& b : prefix.binders) inner.erase(b);
                body = substitute_impl(s.body, inner);
              } else {
                body = substitute_impl(s.body, binding);
              }
            }
            if (!changed && body.same_node(s.body)) return term;
            return Process::prefix(std::move(prefix), std::move(body));
          },
          [&](const Choice& c) {
            Process l = substitute_impl(c.lhs, binding);
            Process r = substitute_impl(c.rhs, binding);
            if (l.same_node(c.lhs) && r.same_node(c.rhs)) return term;
            return Process::choice(std::move(l), std::move(r));
          },
          [&](const Par& p) {
            Process l = substitute_impl(p.lhs, binding);
            Process r = substitute_impl(p.rhs, binding);
            if (l.same_node(p.lhs) && r.same_node(p.rhs)) return term;
            return Process::par(std::move(l), std::move(r));
          },
          [&](const Restrict& r) {
            Process body = substitute_impl(r.body, binding);
            if (body.same_node(r.body)) return term;
            return Process::restrict(std::move(body), r.names);
          },
          [&](const Cond& c) {
            bool changed = false;
            BoolExpr test{c.test.op, substitute_expr(c.test.lhs, binding, changed),
                          substitute_expr(c.test.rhs, binding, changed)};
            Process t = substitute_impl(c.then_branch, binding);
            Process e = substitute_impl(c.else_branch, binding);
            if (!changed && t.same_node(c.then_branch) && e.same_node(c.else_branch)) return term;
            return Process::cond(std::move(test), std::move(t), std::move(e));
          },
          [&](const Call& c) {
            bool changed = false;
            std::vector<ValueExpr> args;
            args.reserve(c.args.size());
            for (const auto& a : c.args) args.push_back(substitute_expr(a, binding, changed));
            if (!changed) return term;
            return Process::call(c.name, std::move(args));
          },
      },
      term.node().v);
}

void collect_expr(const ValueExpr& e, const std::set<std::string>& bound,
                  std::set<std::string>& out) {
  if (!e.is_literal() && bound.count(e.name()) == 0) out.insert(e.name());
}

void collect_free(const Process& term, std::set<std::string>& bound, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Nil&) {},
                 [&](const Seq& s) {
                   if (s.prefix.polarity == Polarity::Output) {
                     for (const auto& a : s.prefix.args) collect_expr(a, bound, out);
                     collect_free(s.body, bound, out);
                     return;
                   }
                   std::vector<std::string> added;
                   for (const auto& b : s.prefix.binders)
                     if (bound.insert(b).second) added.push_back(b);
                   collect_free(s.body, bound, out);
                   for (const auto& b : added) bound.erase(b);
                 },
                 [&](const Choice& c) {
                   collect_free(c.lhs, bound, out);
                   collect_free(c.rhs, bound, out);
                 },
                 [&](const Par& p) {
                   collect_free(p.lhs, bound, out);
                   collect_free(p.rhs, bound, out);
                 },
                 [&](const Restrict& r) { collect_free(r.body, bound, out); },
                 [&](const Cond& c) {
                   collect_expr(c.test.lhs, bound, out);
                   collect_expr(c.test.rhs, bound, out);
                   collect_free(c.then_branch, bound, out);
                   collect_free(c.else_branch, bound, out);
                 },
                 [&](const Call& c) {
                   for (const auto& a : c.args) collect_expr(a, bound, out);
                 },
             },
             term.node().v);
}

}  // namespace

Process substitute(const Process& term, const Binding& binding) {
  return substitute_impl(term, binding);
}

Value eval_value(const ValueExpr& expr) {
  if (!expr.is_literal())
    throw InternalError("cannot evaluate free variable '" + expr.name() + "'");
  return expr.value();
}

bool eval_bool(const BoolExpr& expr) {
  const bool equal = eval_value(expr.lhs) == eval_value(expr.rhs);
  return expr.op == CompareOp::Eq ? equal : !equal;
}

std::set<std::string> free_value_vars(const Process& term) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(term, bound, out);
  return out;
}

bool is_ground(const Process& term) { return free_value_vars(term).empty(); }

}  // namespace ccswb
