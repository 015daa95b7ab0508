#pragma once

// Modal mu-calculus syntax: boolean constants, conjunction/disjunction,
// strong and weak box/diamond modalities, fixpoint variables and binders.

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>

#include "ccswb/ast.hpp"

namespace ccswb {

class LabelPattern {
 public:
  enum class Kind : std::uint8_t { Exact, Tau, AnyVisible };

  // `label` must be visible.
  static LabelPattern exact(GroundLabel label);
  static LabelPattern tau() { return LabelPattern(Kind::Tau, {}); }
  static LabelPattern any_visible() { return LabelPattern(Kind::AnyVisible, {}); }

  Kind kind() const noexcept { return kind_; }
  const GroundLabel& label() const noexcept { return label_; }

  bool matches(const GroundLabel& l) const noexcept;

  friend bool operator==(const LabelPattern&, const LabelPattern&) = default;

 private:
  LabelPattern(Kind kind, GroundLabel label) : kind_(kind), label_(std::move(label)) {}

  Kind kind_;
  GroundLabel label_;
};

enum class Modality : std::uint8_t { DiamondStrong, BoxStrong, DiamondWeak, BoxWeak };
enum class FixKind : std::uint8_t { Least, Greatest };

struct FormulaNode;

class Formula {
 public:
  Formula();  // tt

  static Formula tt();
  static Formula ff();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula modal(Modality m, LabelPattern pattern, Formula body);
  static Formula diamond(LabelPattern p, Formula body) {
    return modal(Modality::DiamondStrong, std::move(p), std::move(body));
  }
  static Formula box(LabelPattern p, Formula body) {
    return modal(Modality::BoxStrong, std::move(p), std::move(body));
  }
  static Formula weak_diamond(LabelPattern p, Formula body) {
    return modal(Modality::DiamondWeak, std::move(p), std::move(body));
  }
  static Formula weak_box(LabelPattern p, Formula body) {
    return modal(Modality::BoxWeak, std::move(p), std::move(body));
  }
  static Formula var(std::string name);
  static Formula mu(std::string var, Formula body);
  static Formula nu(std::string var, Formula body);

  const FormulaNode& node() const noexcept { return *node_; }
  // Identity of the shared node; stable for the lifetime of the formula.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const FormulaNode> node_;
};

struct Tt {
  friend bool operator==(const Tt&, const Tt&) = default;
};
struct Ff {
  friend bool operator==(const Ff&, const Ff&) = default;
};
struct And {
  Formula lhs, rhs;
  friend bool operator==(const And&, const And&) = default;
};
struct Or {
  Formula lhs, rhs;
  friend bool operator==(const Or&, const Or&) = default;
};
struct Modal {
  Modality modality;
  LabelPattern pattern;
  Formula body;
  friend bool operator==(const Modal&, const Modal&) = default;
};
struct FixVar {
  std::string name;
  friend bool operator==(const FixVar&, const FixVar&) = default;
};
struct Fix {
  FixKind kind;
  std::string var;
  Formula body;
  friend bool operator==(const Fix&, const Fix&) = default;
};

struct FormulaNode {
  std::variant<Tt, Ff, And, Or, Modal, FixVar, Fix> v;
};

std::set<std::string> free_fix_vars(const Formula& f);
inline bool is_closed(const Formula& f) { return free_fix_vars(f).empty(); }

// Tt, And, Or, DiamondStrong and DiamondWeak only.
bool is_existential(const Formula& f);

}  // namespace ccswb
