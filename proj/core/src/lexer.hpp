#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ccswb::detail {

enum class Tok {
  Ident,
  Number,
  Newline,
  End,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Plus,
  Bar,
  Backslash,
  Equals,
  NotEquals,
  Quote,
  Minus,
  Lt,
  Gt,
  LtLt,
  GtGt,
  LBracket,
  RBracket,
  LBracketBracket,
  RBracketBracket,
  AndAnd,
  OrOr,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(Tok kind);

// Model text treats newlines outside () and {} as definition separators;
// formula text treats every newline as whitespace. Throws SourceError.
std::vector<Token> tokenize(std::string_view text, bool newlines_significant);

}  // namespace ccswb::detail
