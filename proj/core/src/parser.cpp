#include "ccswb/parser.hpp"

#include <algorithm>
#include <set>

#include "ccswb/errors.hpp"
#include "lexer.hpp"

namespace ccswb {

using detail::Tok;
using detail::Token;

namespace {

constexpr int kMaxNesting = 4000;

bool is_process_keyword(const std::string& s) {
  return s == "if" || s == "then" || s == "else";
}

bool is_formula_keyword(const std::string& s) {
  return s == "tt" || s == "ff" || s == "min" || s == "max";
}

class ParserBase {
 protected:
  explicit ParserBase(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view text) const { return at(Tok::Ident) && peek().text == text; }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, std::string message,
                         std::vector<std::string> expected = {}) const {
    throw SourceError(at.line, at.column, std::move(message), std::move(expected));
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::Ident || t.kind == Tok::Number ? "'" + t.text + "'"
                                                                      : detail::describe(t.kind);
    std::string msg = "unexpected " + found;
    if (!expected.empty()) {
      msg += ", expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i != 0) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
    }
    fail(t, std::move(msg), std::move(expected));
  }

  const Token& expect(Tok kind) {
    if (!at(kind)) unexpected({detail::describe(kind)});
    return take();
  }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }

  struct DepthGuard {
    DepthGuard(ParserBase& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail(parser.peek(), "expression nested too deeply");
    }
    ~DepthGuard() { --parser.depth_; }
    ParserBase& parser;
  };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

class ModelParser : ParserBase {
 public:
  explicit ModelParser(std::string_view text) : ParserBase(detail::tokenize(text, true)) {}

  Model run() {
    Model model;
    skip_newlines();
    while (!at(Tok::End)) {
      parse_definition(model);
      if (!at(Tok::End) && !at(Tok::Newline)) unexpected({"end of line"});
      skip_newlines();
    }
    for (const auto& call : calls_) {
      const Definition* def = model.find(call.name);
      if (def == nullptr) fail(call.at, "unknown process '" + call.name + "'");
      if (def->params.size() != call.arity)
        fail(call.at, "process '" + call.name + "' expects " + std::to_string(def->params.size()) +
                          " argument(s), got " + std::to_string(call.arity));
    }
    return model;
  }

 private:
  struct PendingCall {
    std::string name;
    std::size_t arity;
    Token at;
  };

  void skip_newlines() {
    while (accept(Tok::Newline)) {
    }
  }

  std::string process_name(const Token& t) {
    if (t.kind != Tok::Ident) unexpected({"identifier"});
    if (is_process_keyword(t.text) || t.text == "tau")
      fail(t, "'" + t.text + "' is reserved and cannot name a process");
    return t.text;
  }

  std::string variable_name(const Token& t) {
    if (t.kind != Tok::Ident) unexpected({"variable"});
    if (is_process_keyword(t.text) || t.text == "tau")
      fail(t, "'" + t.text + "' is reserved and cannot name a variable");
    return t.text;
  }

  // Comma-separated, nonempty list of distinct names up to ')'.
  std::vector<std::string> binder_list(const char* what) {
    std::vector<std::string> names;
    do {
      const Token& t = peek();
      std::string name = variable_name(t);
      if (std::find(names.begin(), names.end(), name) != names.end())
        fail(t, std::string("duplicate ") + what + " '" + name + "'");
      names.push_back(std::move(name));
      take();
    } while (accept(Tok::Comma));
    expect(Tok::RParen);
    return names;
  }

  void parse_definition(Model& model) {
    const Token name_tok = peek();
    std::string name = process_name(name_tok);
    take();
    if (model.find(name) != nullptr) fail(name_tok, "duplicate definition '" + name + "'");
    std::vector<std::string> params;
    if (accept(Tok::LParen)) params = binder_list("parameter");
    expect(Tok::Equals);
    scope_ = params;
    Process body = parse_par();
    model.add(Definition{std::move(name), std::move(params), std::move(body)});
  }

  Process parse_par() {
    DepthGuard guard(*this);
    Process lhs = parse_choice();
    if (accept(Tok::Bar)) return Process::par(std::move(lhs), parse_par());
    return lhs;
  }

  Process parse_choice() {
    DepthGuard guard(*this);
    Process lhs = parse_restrict();
    if (accept(Tok::Plus)) return Process::choice(std::move(lhs), parse_choice());
    return lhs;
  }

  Process parse_restrict() {
    Process p = parse_seq();
    while (accept(Tok::Backslash)) {
      expect(Tok::LBrace);
      std::vector<std::string> names;
      do {
        const Token& t = peek();
        if (t.kind != Tok::Ident) unexpected({"action name"});
        if (t.text == "tau") fail(t, "'tau' cannot be restricted");
        if (is_process_keyword(t.text)) fail(t, "'" + t.text + "' is reserved");
        names.push_back(t.text);
        take();
      } while (accept(Tok::Comma));
      expect(Tok::RBrace);
      p = Process::restrict(std::move(p), std::move(names));
    }
    return p;
  }

  ValueExpr parse_value() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      if (t.text != "0" && t.text != "1") fail(t, "value must be 0 or 1", {"0", "1"});
      take();
      return ValueExpr::literal(t.text == "0" ? Value::Zero : Value::One);
    }
    if (t.kind == Tok::Ident && !is_process_keyword(t.text)) {
      if (std::find(scope_.begin(), scope_.end(), t.text) == scope_.end())
        fail(t, "unbound variable '" + t.text + "'");
      take();
      return ValueExpr::variable(t.text);
    }
    unexpected({"value expression"});
  }

  std::vector<ValueExpr> value_list() {
    std::vector<ValueExpr> out;
    do {
      out.push_back(parse_value());
    } while (accept(Tok::Comma));
    expect(Tok::RParen);
    return out;
  }

  Process parse_seq() {
    DepthGuard guard(*this);
    if (at(Tok::Quote)) {
      take();
      const Token& name = peek();
      if (name.kind != Tok::Ident) unexpected({"action name"});
      if (name.text == "tau") fail(name, "'tau' cannot be used as an action name");
      if (is_process_keyword(name.text)) fail(name, "'" + name.text + "' is reserved");
      take();
      std::vector<ValueExpr> args;
      if (accept(Tok::LParen)) args = value_list();
      expect(Tok::Dot);
      Process body = parse_seq();
      return Process::prefix(Prefix::output(name.text, std::move(args)), std::move(body));
    }
    if (at(Tok::Ident) && !is_process_keyword(peek().text)) {
      const Token name = take();
      if (at(Tok::Dot) || (at(Tok::LParen) && is_input_prefix())) {
        if (name.text == "tau") fail(name, "'tau' cannot be used as an action name");
        std::vector<std::string> binders;
        if (accept(Tok::LParen)) binders = binder_list("binder");
        expect(Tok::Dot);
        const std::size_t mark = scope_.size();
        scope_.insert(scope_.end(), binders.begin(), binders.end());
        Process body = parse_seq();
        scope_.resize(mark);
        return Process::prefix(Prefix::input(name.text, std::move(binders)), std::move(body));
      }
      if (name.text == "tau") fail(name, "'tau' is reserved and cannot name a process");
      std::vector<ValueExpr> args;
      if (accept(Tok::LParen)) args = value_list();
      calls_.push_back({name.text, args.size(), name});
      return Process::call(name.text, std::move(args));
    }
    return parse_atom();
  }

  // At '(' after an identifier: does the matching ')' precede a '.'?
  bool is_input_prefix() const {
    std::size_t i = 0;
    int depth = 0;
    for (;; ++i) {
      Tok k = peek(i).kind;
      if (k == Tok::End) return false;
      if (k == Tok::LParen) ++depth;
      if (k == Tok::RParen && --depth == 0) break;
    }
    return peek(i + 1).kind == Tok::Dot;
  }

  Process parse_atom() {
    if (at(Tok::Number)) {
      if (peek().text != "0") fail(peek(), "expected process expression", {"process expression"});
      take();
      return Process::nil();
    }
    if (accept(Tok::LParen)) {
      Process p = parse_par();
      expect(Tok::RParen);
      return p;
    }
    if (at_ident("if")) {
      take();
      BoolExpr test;
      test.lhs = parse_value();
      if (accept(Tok::Equals)) {
        test.op = CompareOp::Eq;
      } else if (accept(Tok::NotEquals)) {
        test.op = CompareOp::Neq;
      } else {
        unexpected({"'='", "'!='"});
      }
      test.rhs = parse_value();
      if (!at_ident("then")) unexpected({"'then'"});
      take();
      Process then_branch = parse_par();
      if (!at_ident("else")) unexpected({"'else'"});
      take();
      Process else_branch = parse_par();
      return Process::cond(std::move(test), std::move(then_branch), std::move(else_branch));
    }
    const Token& t = peek();
    fail(t,
         t.kind == Tok::End || t.kind == Tok::Newline
             ? "unexpected " + detail::describe(t.kind) + ", expected process expression"
             : "expected process expression",
         {"process expression"});
  }

  std::vector<std::string> scope_;
  std::vector<PendingCall> calls_;
};

class FormulaParser : ParserBase {
 public:
  explicit FormulaParser(std::string_view text) : ParserBase(detail::tokenize(text, false)) {}

  Formula run() {
    Formula f = parse_or();
    if (!at(Tok::End)) unexpected({"end of input"});
    return f;
  }

 private:
  Formula parse_or() {
    DepthGuard guard(*this);
    Formula lhs = parse_and();
    if (accept(Tok::OrOr)) return Formula::disj(std::move(lhs), parse_or());
    return lhs;
  }

  Formula parse_and() {
    DepthGuard guard(*this);
    Formula lhs = parse_unary();
    if (accept(Tok::AndAnd)) return Formula::conj(std::move(lhs), parse_and());
    return lhs;
  }

  LabelPattern parse_label() {
    if (accept(Tok::Minus)) return LabelPattern::any_visible();
    if (at_ident("tau")) {
      take();
      return LabelPattern::tau();
    }
    const bool output = accept(Tok::Quote);
    const Token& name = peek();
    if (name.kind != Tok::Ident) unexpected({"action label"});
    if (name.text == "tau") fail(name, "'tau' has no output polarity");
    take();
    std::vector<Value> args;
    if (accept(Tok::LParen)) {
      do {
        const Token& v = peek();
        if (v.kind != Tok::Number || (v.text != "0" && v.text != "1"))
          unexpected({"0", "1"});
        args.push_back(v.text == "0" ? Value::Zero : Value::One);
        take();
      } while (accept(Tok::Comma));
      expect(Tok::RParen);
    }
    return LabelPattern::exact(output ? GroundLabel::output(name.text, std::move(args))
                                      : GroundLabel::input(name.text, std::move(args)));
  }

  Formula parse_modal(Modality m, Tok close) {
    LabelPattern p = parse_label();
    expect(close);
    return Formula::modal(m, std::move(p), parse_unary());
  }

  Formula parse_unary() {
    DepthGuard guard(*this);
    if (accept(Tok::Lt)) return parse_modal(Modality::DiamondStrong, Tok::Gt);
    if (accept(Tok::LtLt)) return parse_modal(Modality::DiamondWeak, Tok::GtGt);
    if (accept(Tok::LBracket)) return parse_modal(Modality::BoxStrong, Tok::RBracket);
    if (accept(Tok::LBracketBracket)) return parse_modal(Modality::BoxWeak, Tok::RBracketBracket);
    if (accept(Tok::LParen)) {
      Formula f = parse_or();
      expect(Tok::RParen);
      return f;
    }
    if (at_ident("tt")) {
      take();
      return Formula::tt();
    }
    if (at_ident("ff")) {
      take();
      return Formula::ff();
    }
    if (at_ident("min") || at_ident("max")) {
      const bool least = peek().text == "min";
      take();
      const Token& var = peek();
      if (var.kind != Tok::Ident) unexpected({"fixpoint variable"});
      if (is_formula_keyword(var.text)) fail(var, "'" + var.text + "' is reserved");
      std::string name = var.text;
      take();
      expect(Tok::Dot);
      bound_.push_back(name);
      Formula body = parse_or();
      bound_.pop_back();
      return least ? Formula::mu(std::move(name), std::move(body))
                   : Formula::nu(std::move(name), std::move(body));
    }
    if (at(Tok::Ident)) {
      const Token& var = peek();
      if (std::find(bound_.begin(), bound_.end(), var.text) == bound_.end())
        fail(var, "unbound fixpoint variable '" + var.text + "'");
      take();
      return Formula::var(var.text);
    }
    unexpected({"formula"});
  }

  std::vector<std::string> bound_;
};

}  // namespace

Model parse_model(std::string_view text) { return ModelParser(text).run(); }

Formula parse_formula(std::string_view text) { return FormulaParser(text).run(); }

}  // namespace ccswb
