#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ccswb/errors.hpp"
#include "ccswb/parser.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace ccswb {
namespace {

ValueExpr var(const char* n) { return ValueExpr::variable(n); }

SourceError model_error(const std::string& text) {
  try {
    parse_model(text);
  } catch (const SourceError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a SourceError for: " << text;
  return SourceError(0, 0, "");
}

SourceError formula_error(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const SourceError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a SourceError for: " << text;
  return SourceError(0, 0, "");
}

TEST(ParseModel, EmptyChannelEquation) {
  Model m = parse_model("Empty = put(d,b) . Full(d,b)\nFull(d,b) = 0");
  ASSERT_EQ(m.size(), 2u);
  const Definition* empty = m.find("Empty");
  ASSERT_NE(empty, nullptr);
  EXPECT_EQ(empty->body, Process::prefix(Prefix::input("put", {"d", "b"}),
                                         Process::call("Full", {var("d"), var("b")})));
  EXPECT_EQ(m.find("Full")->params, (std::vector<std::string>{"d", "b"}));
}

TEST(ParseModel, EmptyInputIsEmptyModel) {
  EXPECT_TRUE(parse_model("").empty());
  EXPECT_TRUE(parse_model("\n# only a comment\n\n").empty());
}

TEST(ParseModel, MissingProcessExpressionPosition) {
  SourceError e = model_error("A = .");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 5u);
  EXPECT_EQ(e.expected(), std::vector<std::string>{"process expression"});
}

TEST(ParseModel, SemanticErrorsPointAtOffendingToken) {
  SourceError dup = model_error("A = 0\nB = 0\nA = 0");
  EXPECT_EQ(dup.line(), 3u);
  EXPECT_EQ(dup.column(), 1u);

  SourceError unknown = model_error("A = a . Missing");
  EXPECT_EQ(unknown.column(), 9u);
  EXPECT_NE(unknown.message().find("Missing"), std::string::npos);

  SourceError arity = model_error("A = B(0)\nB(x,y) = 0");
  EXPECT_EQ(arity.line(), 1u);
  EXPECT_EQ(arity.column(), 5u);

  SourceError binder = model_error("A = a(x,x) . 0");
  EXPECT_EQ(binder.column(), 9u);

  SourceError param = model_error("A(x,x) = 0");
  EXPECT_EQ(param.column(), 5u);

  SourceError unbound = model_error("A(x) = 'a(y) . 0");
  EXPECT_EQ(unbound.column(), 11u);

  EXPECT_NO_THROW(parse_model("A(x) = 'a(x) . a(y) . 'b(y) . 0"));
}

TEST(ParseModel, ReservedNames) {
  EXPECT_EQ(model_error("A = tau . 0").column(), 5u);
  EXPECT_EQ(model_error("A = 'tau . 0").column(), 6u);
  EXPECT_THROW(parse_model("tau = 0"), SourceError);
  EXPECT_THROW(parse_model("if = 0"), SourceError);
  EXPECT_THROW(parse_model("A = a . 0 \\ {tau}"), SourceError);
}

TEST(ParseModel, LexicalErrors) {
  SourceError e = model_error("A = a . 0\nB = b ; 0");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 7u);
  EXPECT_THROW(parse_model("A = 'a(2) . 0"), SourceError);
  EXPECT_THROW(parse_model("A = 'a . 0 \\ {}"), SourceError);
  EXPECT_THROW(parse_model("A = 'a"), SourceError);   // output prefix needs a continuation
  EXPECT_THROW(parse_model("A = a()"), SourceError);
}

TEST(ParseModel, ColumnsCountCodePoints) {
  // "é" is two bytes but one column.
  SourceError e = model_error("# é\nA = \xC3\xA9");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 5u);
}

TEST(ParseModel, Precedence) {
  // prefix . binds tightest, then \{...}, then +, then |.
  Model m = parse_model("A = a . 0 + b . 0 | c . 0 \\ {c}");
  const Process& body = m.find("A")->body;
  const auto* par = std::get_if<Par>(&body.node().v);
  ASSERT_NE(par, nullptr);
  EXPECT_TRUE(std::holds_alternative<Choice>(par->lhs.node().v));
  EXPECT_TRUE(std::holds_alternative<Restrict>(par->rhs.node().v));

  // + and | associate to the right.
  Model r = parse_model("A = a . 0 + b . 0 + c . 0");
  const auto& top = std::get<Choice>(r.find("A")->body.node().v);
  EXPECT_TRUE(std::holds_alternative<Seq>(top.lhs.node().v));
  EXPECT_TRUE(std::holds_alternative<Choice>(top.rhs.node().v));
}

TEST(ParseModel, ConditionalExtendsRight) {
  Model m = parse_model("A(x) = if x = 0 then a . 0 else b . 0 + c . 0");
  const auto& cond = std::get<Cond>(m.find("A")->body.node().v);
  EXPECT_TRUE(std::holds_alternative<Choice>(cond.else_branch.node().v));
  EXPECT_EQ(cond.test.op, CompareOp::Eq);

  Model n = parse_model("A(x) = if x != 1 then 0 else 0");
  EXPECT_EQ(std::get<Cond>(n.find("A")->body.node().v).test.op, CompareOp::Neq);
}

TEST(ParseModel, LineContinuationInsideParentheses) {
  Model m = parse_model("A = (a . 0\r\n  + b . 0)\r\nB = 'c . A\r\n");
  EXPECT_EQ(m.size(), 2u);
  EXPECT_THROW(parse_model("A = a . 0\n  + b . 0"), SourceError);
}

TEST(ParseModel, CallsMayReferToLaterDefinitions) {
  EXPECT_NO_THROW(parse_model("A = a . B(1)\nB(x) = 'b(x) . A"));
}

TEST(PrintModel, SpecEquation) {
  Model m = parse_model("Spec = choose(x) . (Spec + 'keep(x) . Spec)");
  EXPECT_EQ(print_model(m), "Spec = choose(x) . (Spec + 'keep(x) . Spec)\n");
}

TEST(PrintModel, CorpusRoundTrip) {
  const Model& m = testing::bb84_model();
  EXPECT_EQ(parse_model(print_model(m)), m);
}

TEST(PrintModel, ParenthesizesWhereNeeded) {
  // Left-nested choice, conditional closed by a parenthesis, restriction inside a prefix.
  Process cond = Process::cond(BoolExpr{CompareOp::Eq, ValueExpr::literal(Value::Zero),
                                        ValueExpr::literal(Value::One)},
                               Process::nil(), Process::nil());
  Process p = Process::par(
      Process::choice(Process::choice(Process::nil(), cond), Process::nil()),
      Process::prefix(Prefix::input("a"), Process::restrict(Process::nil(), {"a"})));
  Model m;
  m.add(Definition{"A", {}, p});
  const std::string text = print_model(m);
  EXPECT_EQ(text, "A = (0 + if 0 = 1 then 0 else 0) + 0 | a . (0 \\ {a})\n");
  EXPECT_EQ(parse_model(text), m);
}

TEST(ParseFormula, EavesdropperProperty) {
  Formula f = parse_formula("<<choose(0)>> <<'keep(1)>> tt");
  EXPECT_EQ(f, testing::choose0_keep1_formula());
  EXPECT_EQ(print_formula(f), "<<choose(0)>><<'keep(1)>>tt");
}

TEST(ParseFormula, Basics) {
  EXPECT_EQ(parse_formula("tt"), Formula::tt());
  EXPECT_EQ(print_formula(Formula::tt()), "tt");
  EXPECT_EQ(parse_formula("min X . <-> X"),
            Formula::mu("X", Formula::diamond(LabelPattern::any_visible(), Formula::var("X"))));
  EXPECT_EQ(parse_formula("[tau]ff"), Formula::box(LabelPattern::tau(), Formula::ff()));
  EXPECT_EQ(parse_formula("[[a(0,1)]] ff"),
            Formula::weak_box(
                LabelPattern::exact(GroundLabel::input("a", {Value::Zero, Value::One})),
                Formula::ff()));
}

TEST(ParseFormula, PrecedenceAndAssociativity) {
  Formula f = parse_formula("tt || ff && <a>tt || ff");
  // || loosest and right-associative; && binds tighter.
  const auto& top = std::get<Or>(f.node().v);
  EXPECT_EQ(top.lhs, Formula::tt());
  const auto& rest = std::get<Or>(top.rhs.node().v);
  EXPECT_TRUE(std::holds_alternative<And>(rest.lhs.node().v));

  // The fixpoint body extends as far right as possible.
  Formula g = parse_formula("max X . <a>X && tt");
  EXPECT_TRUE(std::holds_alternative<And>(std::get<Fix>(g.node().v).body.node().v));
}

TEST(ParseFormula, Errors) {
  SourceError unbound = formula_error("<a> X");
  EXPECT_EQ(unbound.column(), 5u);
  EXPECT_THROW(parse_formula("min X . Y"), SourceError);
  EXPECT_THROW(parse_formula("<'tau>tt"), SourceError);
  EXPECT_THROW(parse_formula("<a(2)>tt"), SourceError);
  EXPECT_THROW(parse_formula("tt &&"), SourceError);
  EXPECT_THROW(parse_formula("min tt . tt"), SourceError);
  EXPECT_THROW(parse_formula(""), SourceError);
  EXPECT_NO_THROW(parse_formula("min X . (X || max Y . X && Y)"));
}

TEST(ParseModel, Deterministic) {
  const std::string text = print_model(testing::bb84_model());
  EXPECT_EQ(parse_model(text), parse_model(text));
}

// Property: parse(print(m)) == m for generated models and formulas.
TEST(RoundTripProperty, GeneratedModels) {
  testing::Rng rng(1234);
  for (int i = 0; i < 1000; ++i) {
    Model m = testing::random_syntax_model(rng);
    const std::string text = print_model(m);
    Model back;
    ASSERT_NO_THROW(back = parse_model(text)) << text;
    ASSERT_EQ(back, m) << text;
  }
}

TEST(RoundTripProperty, GeneratedFormulas) {
  testing::Rng rng(99);
  for (int i = 0; i < 1000; ++i) {
    Formula f = testing::random_formula(rng, 5);
    const std::string text = print_formula(f);
    Formula back;
    ASSERT_NO_THROW(back = parse_formula(text)) << text;
    ASSERT_EQ(back, f) << text;
  }
}

// Property: every failure is a SourceError with in-bounds coordinates.
TEST(ErrorTotalityProperty, GarbledInputs) {
  testing::Rng rng(7);
  const std::string seed = print_model(testing::bb84_model());
  const std::string alphabet = "abAB01(){}.,+|\\='!#<>[]-& \n\t\xC3\xA9";
  for (int i = 0; i < 2000; ++i) {
    std::string text = seed;
    const int edits = 1 + static_cast<int>(rng() % 6);
    for (int e = 0; e < edits; ++e) {
      const std::size_t at = rng() % (text.size() + 1);
      switch (rng() % 3) {
        case 0: text.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
        case 1: if (at < text.size()) text.erase(at, 1); break;
        default: if (at < text.size()) text[at] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    try {
      parse_model(text);
    } catch (const SourceError& err) {
      std::vector<std::size_t> line_lengths{0};
      for (unsigned char c : text) {
        if (c == '\n') {
          line_lengths.push_back(0);
        } else if ((c & 0xC0) != 0x80) {
          ++line_lengths.back();
        }
      }
      ASSERT_GE(err.line(), 1u);
      ASSERT_LE(err.line(), line_lengths.size());
      ASSERT_GE(err.column(), 1u);
      ASSERT_LE(err.column(), line_lengths[err.line() - 1] + 1) << text;
    }
  }
}

TEST(ErrorTotalityProperty, DeepNestingIsReportedNotFatal) {
  std::string text = "A = " + std::string(20000, '(') + "0" + std::string(20000, ')');
  EXPECT_THROW(parse_model(text), SourceError);
  std::string f(20000, '(');
  EXPECT_THROW(parse_formula(f + "tt" + std::string(20000, ')')), SourceError);
}

}  // namespace
}  // namespace ccswb
