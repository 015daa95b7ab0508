#include "lexer.hpp"

#include <cctype>

#include "ccswb/errors.hpp"

namespace ccswb::detail {

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Plus: return "'+'";
    case Tok::Bar: return "'|'";
    case Tok::Backslash: return "'\\'";
    case Tok::Equals: return "'='";
    case Tok::NotEquals: return "'!='";
    case Tok::Quote: return "'''";
    case Tok::Minus: return "'-'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::LtLt: return "'<<'";
    case Tok::GtGt: return "'>>'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBracketBracket: return "'[['";
    case Tok::RBracketBracket: return "']]'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
  }
  return "token";
}

namespace {

class Lexer {
 public:
  Lexer(std::string_view text, bool newlines) : text_(text), newlines_(newlines) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        if (newlines_ && depth_ == 0) out.push_back({Tok::Newline, "\n", line_, col_});
        ++pos_;
        ++line_;
        col_ = 1;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r') {
        advance(1);
        continue;
      }
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
        continue;
      }
      const std::size_t line = line_;
      const std::size_t col = col_;
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                                      text_[end] == '_'))
          ++end;
        out.push_back({Tok::Ident, std::string(text_.substr(pos_, end - pos_)), line, col});
        advance(end - pos_);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        out.push_back({Tok::Number, std::string(text_.substr(pos_, end - pos_)), line, col});
        advance(end - pos_);
        continue;
      }
      auto emit = [&](Tok kind, std::size_t len) {
        out.push_back({kind, std::string(text_.substr(pos_, len)), line, col});
        advance(len);
      };
      const char n = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
      switch (c) {
        case '(': ++depth_; emit(Tok::LParen, 1); break;
        case ')': if (depth_ > 0) --depth_; emit(Tok::RParen, 1); break;
        case '{': ++depth_; emit(Tok::LBrace, 1); break;
        case '}': if (depth_ > 0) --depth_; emit(Tok::RBrace, 1); break;
        case ',': emit(Tok::Comma, 1); break;
        case '.': emit(Tok::Dot, 1); break;
        case '+': emit(Tok::Plus, 1); break;
        case '\\': emit(Tok::Backslash, 1); break;
        case '=': emit(Tok::Equals, 1); break;
        case '\'': emit(Tok::Quote, 1); break;
        case '-': emit(Tok::Minus, 1); break;
        case '|': n == '|' ? emit(Tok::OrOr, 2) : emit(Tok::Bar, 1); break;
        case '<': n == '<' ? emit(Tok::LtLt, 2) : emit(Tok::Lt, 1); break;
        case '>': n == '>' ? emit(Tok::GtGt, 2) : emit(Tok::Gt, 1); break;
        case '[': n == '[' ? emit(Tok::LBracketBracket, 2) : emit(Tok::LBracket, 1); break;
        case ']': n == ']' ? emit(Tok::RBracketBracket, 2) : emit(Tok::RBracket, 1); break;
        case '!':
          if (n != '=') throw SourceError(line, col, "unexpected character '!'", {"'!='"});
          emit(Tok::NotEquals, 2);
          break;
        case '&':
          if (n != '&') throw SourceError(line, col, "unexpected character '&'", {"'&&'"});
          emit(Tok::AndAnd, 2);
          break;
        default:
          throw SourceError(line, col, "unexpected character");
      }
    }
    out.push_back({Tok::End, "", line_, col_});
    return out;
  }

 private:
  // Columns count code points: UTF-8 continuation bytes do not advance.
  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes && pos_ < text_.size(); ++i, ++pos_) {
      if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) ++col_;
    }
  }

  std::string_view text_;
  bool newlines_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  int depth_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text, bool newlines_significant) {
  return Lexer(text, newlines_significant).run();
}

}  // namespace ccswb::detail
