#pragma once

// Abstract syntax of the value-passing CCS dialect: binary values, value and
// boolean expressions, action prefixes, process terms, definitions, models,
// and the ground transition labels produced by the semantics.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ccswb {

enum class Value : std::uint8_t { Zero = 0, One = 1 };

inline constexpr std::array<Value, 2> kAllValues{Value::Zero, Value::One};

constexpr char to_char(Value v) noexcept { return v == Value::Zero ? '0' : '1'; }

class ValueExpr {
 public:
  static ValueExpr literal(Value v) { return ValueExpr(v); }
  static ValueExpr variable(std::string name) { return ValueExpr(std::move(name)); }

  bool is_literal() const noexcept { return std::holds_alternative<Value>(repr_); }
  Value value() const { return std::get<Value>(repr_); }
  const std::string& name() const { return std::get<std::string>(repr_); }

  friend bool operator==(const ValueExpr&, const ValueExpr&) = default;

 private:
  explicit ValueExpr(Value v) : repr_(v) {}
  explicit ValueExpr(std::string name) : repr_(std::move(name)) {}

  std::variant<Value, std::string> repr_;
};

enum class CompareOp : std::uint8_t { Eq, Neq };

struct BoolExpr {
  CompareOp op = CompareOp::Eq;
  ValueExpr lhs = ValueExpr::literal(Value::Zero);
  ValueExpr rhs = ValueExpr::literal(Value::Zero);

  friend bool operator==(const BoolExpr&, const BoolExpr&) = default;
};

enum class Polarity : std::uint8_t { Input = 0, Output = 1 };

// An action prefix. Inputs bind variables, outputs carry value expressions;
// exactly one of `binders` / `args` is used depending on the polarity.
struct Prefix {
  Polarity polarity = Polarity::Input;
  std::string action;
  std::vector<std::string> binders;
  std::vector<ValueExpr> args;

  static Prefix input(std::string action, std::vector<std::string> binders = {});
  static Prefix output(std::string action, std::vector<ValueExpr> args = {});

  std::size_t arity() const noexcept {
    return polarity == Polarity::Input ? binders.size() : args.size();
  }

  friend bool operator==(const Prefix&, const Prefix&) = default;
};

struct ProcessNode;

// Immutable, shared handle to a process term. Copying is cheap.
class Process {
 public:
  Process();  // 0

  static Process nil();
  static Process prefix(Prefix prefix, Process body);
  static Process choice(Process lhs, Process rhs);
  static Process par(Process lhs, Process rhs);
  // `names` is normalized to a sorted set; must be nonempty.
  static Process restrict(Process body, std::vector<std::string> names);
  static Process cond(BoolExpr test, Process then_branch, Process else_branch);
  static Process call(std::string name, std::vector<ValueExpr> args = {});

  const ProcessNode& node() const noexcept { return *node_; }
  bool same_node(const Process& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Process& a, const Process& b);

 private:
  explicit Process(std::shared_ptr<const ProcessNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const ProcessNode> node_;
};

struct Nil {
  friend bool operator==(const Nil&, const Nil&) = default;
};
struct Seq {
  Prefix prefix;
  Process body;
  friend bool operator==(const Seq&, const Seq&) = default;
};
struct Choice {
  Process lhs, rhs;
  friend bool operator==(const Choice&, const Choice&) = default;
};
struct Par {
  Process lhs, rhs;
  friend bool operator==(const Par&, const Par&) = default;
};
struct Restrict {
  Process body;
  std::vector<std::string> names;  // sorted, unique, nonempty
  friend bool operator==(const Restrict&, const Restrict&) = default;
};
struct Cond {
  BoolExpr test;
  Process then_branch, else_branch;
  friend bool operator==(const Cond&, const Cond&) = default;
};
struct Call {
  std::string name;
  std::vector<ValueExpr> args;
  friend bool operator==(const Call&, const Call&) = default;
};

struct ProcessNode {
  std::variant<Nil, Seq, Choice, Par, Restrict, Cond, Call> v;
};

struct Definition {
  std::string name;
  std::vector<std::string> params;
  Process body;

  friend bool operator==(const Definition&, const Definition&) = default;
};

// Definitions in declaration order, with lookup by name.
class Model {
 public:
  // Throws ccswb::Error on a duplicate name.
  void add(Definition def);

  const Definition* find(std::string_view name) const;
  const std::vector<Definition>& definitions() const noexcept { return defs_; }
  std::size_t size() const noexcept { return defs_.size(); }
  bool empty() const noexcept { return defs_.empty(); }

  friend bool operator==(const Model& a, const Model& b) { return a.defs_ == b.defs_; }

 private:
  std::vector<Definition> defs_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class LabelKind : std::uint8_t { Tau = 0, Visible = 1 };

// Transition label. The defaulted ordering is the label total order used for
// tie-breaking everywhere: tau first, then inputs before outputs, then action
// name, then argument tuple.
struct GroundLabel {
  LabelKind kind = LabelKind::Tau;
  Polarity polarity = Polarity::Input;
  std::string action;
  std::vector<Value> args;

  static GroundLabel tau() { return {}; }
  static GroundLabel input(std::string action, std::vector<Value> args = {});
  static GroundLabel output(std::string action, std::vector<Value> args = {});

  bool is_tau() const noexcept { return kind == LabelKind::Tau; }

  friend bool operator==(const GroundLabel&, const GroundLabel&) = default;
  friend std::strong_ordering operator<=>(const GroundLabel&, const GroundLabel&) = default;
};

// "tau", "choose(0)", "'keep(1)", "go".
std::string to_string(const GroundLabel& label);
// Labels joined with '.', e.g. "choose(0).'keep(1)".
std::string render_trace(const std::vector<GroundLabel>& trace);

using Binding = std::map<std::string, Value, std::less<>>;

// Replaces free occurrences of bound variables; input binders shadow.
Process substitute(const Process& term, const Binding& binding);

// Throws InternalError when an operand is still a variable.
Value eval_value(const ValueExpr& expr);
bool eval_bool(const BoolExpr& expr);

std::set<std::string> free_value_vars(const Process& term);
bool is_ground(const Process& term);

}  // namespace ccswb
