#include "ccswb/formula.hpp"

#include "ccswb/errors.hpp"
#include "overloaded.hpp"

namespace ccswb {

using detail::overloaded;

LabelPattern LabelPattern::exact(GroundLabel label) {
  if (label.is_tau()) throw Error("exact label pattern must be visible");
  return LabelPattern(Kind::Exact, std::move(label));
}

bool LabelPattern::matches(const GroundLabel& l) const noexcept {
  switch (kind_) {
    case Kind::Exact:
      return l == label_;
    case Kind::Tau:
      return l.is_tau();
    case Kind::AnyVisible:
      return !l.is_tau();
  }
  return false;
}

namespace {

std::shared_ptr<const FormulaNode> make(FormulaNode node) {
  return std::make_shared<const FormulaNode>(std::move(node));
}

const std::shared_ptr<const FormulaNode>& tt_node() {
  static const auto node = make(FormulaNode{Tt{}});
  return node;
}

}  // namespace

Formula::Formula() : node_(tt_node()) {}

Formula Formula::tt() { return Formula(); }
Formula Formula::ff() { return Formula(make(FormulaNode{Ff{}})); }
Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(make(FormulaNode{And{std::move(lhs), std::move(rhs)}}));
}
Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(make(FormulaNode{Or{std::move(lhs), std::move(rhs)}}));
}
Formula Formula::modal(Modality m, LabelPattern pattern, Formula body) {
  return Formula(make(FormulaNode{Modal{m, std::move(pattern), std::move(body)}}));
}
Formula Formula::var(std::string name) { return Formula(make(FormulaNode{FixVar{std::move(name)}})); }
Formula Formula::mu(std::string var, Formula body) {
  return Formula(make(FormulaNode{Fix{FixKind::Least, std::move(var), std::move(body)}}));
}
Formula Formula::nu(std::string var, Formula body) {
  return Formula(make(FormulaNode{Fix{FixKind::Greatest, std::move(var), std::move(body)}}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->v == b.node_->v;
}

namespace {

void collect(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  std::visit(overloaded{
                 [](const Tt&) {},
                 [](const Ff&) {},
                 [&](const And& a) {
                   collect(a.lhs, bound, out);
                   collect(a.rhs, bound, out);
                 },
                 [&](const Or& o) {
                   collect(o.lhs, bound, out);
                   collect(o.rhs, bound, out);
                 },
                 [&](const Modal& m) { collect(m.body, bound, out); },
                 [&](const FixVar& v) {
                   if (bound.count(v.name) == 0) out.insert(v.name);
                 },
                 [&](const Fix& fx) {
                   auto it = bound.insert(fx.var);
                   collect(fx.body, bound, out);
                   bound.erase(it);
                 },
             },
             f.node().v);
}

}  // namespace

std::set<std::string> free_fix_vars(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect(f, bound, out);
  return out;
}

bool is_existential(const Formula& f) {
  return std::visit(overloaded{
                        [](const Tt&) { return true; },
                        [](const Ff&) { return false; },
                        [](const And& a) { return is_existential(a.lhs) && is_existential(a.rhs); },
                        [](const Or& o) { return is_existential(o.lhs) && is_existential(o.rhs); },
                        [](const Modal& m) {
                          return (m.modality == Modality::DiamondStrong ||
                                  m.modality == Modality::DiamondWeak) &&
                                 is_existential(m.body);
                        },
                        [](const FixVar&) { return false; },
                        [](const Fix&) { return false; },
                    },
                    f.node().v);
}

}  // namespace ccswb
