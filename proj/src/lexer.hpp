#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "gadel/formula.hpp"

namespace gadel::detail {

enum class Tok {
  Ident, True, False, Not, And, Or, Arrow, LParen, RParen,
  Colon, Comma, Slash, Dot, Section, End
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

const char* describe(Tok kind);

// Hand-written scanner shared by the formula and theory parsers. With
// `sections` enabled, `W:` and `D:` written as the first token of a line
// (no space before the colon) lex as Section tokens.
class Lexer {
 public:
  Lexer(std::string_view text, bool sections);

  const Token& peek() const { return current_; }
  Token next();

 private:
  Token scan();
  void skip_blank();

  std::string_view text_;
  bool sections_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t last_token_line_ = 0;
  Token current_;
};

// Recursive-descent parser for the formula grammar over a Lexer.
class FormulaParser {
 public:
  explicit FormulaParser(Lexer& lex) : lex_(lex) {}
  Formula parse();

 private:
  Formula implication();
  Formula disjunction();
  Formula conjunction();
  Formula unary();

  Lexer& lex_;
};

[[noreturn]] void fail_at(const Token& t, const std::string& msg);
Token expect(Lexer& lex, Tok kind);

}  // namespace gadel::detail
