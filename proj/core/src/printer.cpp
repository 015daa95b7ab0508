#include <string>

#include "ccswb/parser.hpp"
#include "overloaded.hpp"

namespace ccswb {

using detail::overloaded;

namespace {

// Binding strength, loosest first. A term prints bare when its own level is
// at least the level its context demands. Conditionals and fixpoints extend
// as far right as possible, so they print bare only in tail position.
enum ProcLevel { kPar = 0, kChoice = 1, kRestrict = 2, kSeq = 3 };

void append_value(std::string& out, const ValueExpr& e) {
  if (e.is_literal()) {
    out += to_char(e.value());
  } else {
    out += e.name();
  }
}

template <class T, class F>
void append_list(std::string& out, const std::vector<T>& items, F&& each) {
  if (items.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ',';
    each(items[i]);
  }
  out += ')';
}

void append_prefix(std::string& out, const Prefix& p) {
  if (p.polarity == Polarity::Output) {
    out += '\'';
    out += p.action;
    append_list(out, p.args, [&](const ValueExpr& e) { append_value(out, e); });
  } else {
    out += p.action;
    append_list(out, p.binders, [&](const std::string& b) { out += b; });
  }
}

int level_of(const Process& p) {
  return std::visit(overloaded{
                        [](const Par&) { return int{kPar}; },
                        [](const Choice&) { return int{kChoice}; },
                        [](const Restrict&) { return int{kRestrict}; },
                        [](const auto&) { return int{kSeq}; },
                    },
                    p.node().v);
}

void print(std::string& out, const Process& p, int min_level, bool tail) {
  const bool is_cond = std::holds_alternative<Cond>(p.node().v);
  if (level_of(p) < min_level || (is_cond && !tail)) {
    out += '(';
    print(out, p, kPar, true);
    out += ')';
    return;
  }
  std::visit(overloaded{
                 [&](const Nil&) { out += '0'; },
                 [&](const Seq& s) {
                   append_prefix(out, s.prefix);
                   out += " . ";
                   print(out, s.body, kSeq, tail);
                 },
                 [&](const Choice& c) {
                   print(out, c.lhs, kRestrict, false);
                   out += " + ";
                   print(out, c.rhs, kChoice, tail);
                 },
                 [&](const Par& c) {
                   print(out, c.lhs, kChoice, false);
                   out += " | ";
                   print(out, c.rhs, kPar, tail);
                 },
                 [&](const Restrict& r) {
                   print(out, r.body, kRestrict, false);
                   out += " \\ {";
                   for (std::size_t i = 0; i < r.names.size(); ++i) {
                     if (i != 0) out += ", ";
                     out += r.names[i];
                   }
                   out += '}';
                 },
                 [&](const Cond& c) {
                   out += "if ";
                   append_value(out, c.test.lhs);
                   out += c.test.op == CompareOp::Eq ? " = " : " != ";
                   append_value(out, c.test.rhs);
                   out += " then ";
                   print(out, c.then_branch, kPar, true);
                   out += " else ";
                   print(out, c.else_branch, kPar, true);
                 },
                 [&](const Call& c) {
                   out += c.name;
                   append_list(out, c.args, [&](const ValueExpr& e) { append_value(out, e); });
                 },
             },
             p.node().v);
}

enum FormulaLevel { kOr = 0, kAnd = 1, kUnary = 2 };

int level_of(const Formula& f) {
  return std::visit(overloaded{
                        [](const Or&) { return int{kOr}; },
                        [](const And&) { return int{kAnd}; },
                        [](const auto&) { return int{kUnary}; },
                    },
                    f.node().v);
}

void print(std::string& out, const Formula& f, int min_level, bool tail) {
  const bool is_fix = std::holds_alternative<Fix>(f.node().v);
  if (level_of(f) < min_level || (is_fix && !tail)) {
    out += '(';
    print(out, f, kOr, true);
    out += ')';
    return;
  }
  std::visit(overloaded{
                 [&](const Tt&) { out += "tt"; },
                 [&](const Ff&) { out += "ff"; },
                 [&](const And& a) {
                   print(out, a.lhs, kUnary, false);
                   out += " && ";
                   print(out, a.rhs, kAnd, tail);
                 },
                 [&](const Or& o) {
                   print(out, o.lhs, kAnd, false);
                   out += " || ";
                   print(out, o.rhs, kOr, tail);
                 },
                 [&](const Modal& m) {
                   const char* open = "<";
                   const char* close = ">";
                   switch (m.modality) {
                     case Modality::DiamondStrong: break;
                     case Modality::BoxStrong: open = "["; close = "]"; break;
                     case Modality::DiamondWeak: open = "<<"; close = ">>"; break;
                     case Modality::BoxWeak: open = "[["; close = "]]"; break;
                   }
                   out += open;
                   out += print_label_pattern(m.pattern);
                   out += close;
                   print(out, m.body, kUnary, tail);
                 },
                 [&](const FixVar& v) { out += v.name; },
                 [&](const Fix& fx) {
                   out += fx.kind == FixKind::Least ? "min " : "max ";
                   out += fx.var;
                   out += " . ";
                   print(out, fx.body, kOr, true);
                 },
             },
             f.node().v);
}

}  // namespace

std::string print_process(const Process& p) {
  std::string out;
  print(out, p, kPar, true);
  return out;
}

std::string print_model(const Model& m) {
  std::string out;
  for (const auto& def : m.definitions()) {
    out += def.name;
    append_list(out, def.params, [&](const std::string& b) { out += b; });
    out += " = ";
    print(out, def.body, kPar, true);
    out += '\n';
  }
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print(out, f, kOr, true);
  return out;
}

std::string print_label_pattern(const LabelPattern& p) {
  switch (p.kind()) {
    case LabelPattern::Kind::Tau: return "tau";
    case LabelPattern::Kind::AnyVisible: return "-";
    case LabelPattern::Kind::Exact: return to_string(p.label());
  }
  return {};
}

}  // namespace ccswb
