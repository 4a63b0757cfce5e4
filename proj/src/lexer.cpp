#include "lexer.hpp"

#include <cctype>

namespace gadel::detail {

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Slash: return "'/'";
    case Tok::Dot: return "'.'";
    case Tok::Section: return "section header";
    case Tok::End: return "end of input";
  }
  return "?";
}

void fail_at(const Token& t, const std::string& msg) {
  throw ParseError(msg, t.line, t.column);
}

Token expect(Lexer& lex, Tok kind) {
  if (lex.peek().kind != kind) {
    const Token& t = lex.peek();
    std::string got = t.kind == Tok::Ident ? "'" + t.text + "'" : describe(t.kind);
    fail_at(t, std::string("expected ") + describe(kind) + ", found " + got);
  }
  return lex.next();
}

Lexer::Lexer(std::string_view text, bool sections) : text_(text), sections_(sections) {
  current_ = scan();
}

Token Lexer::next() {
  Token t = std::move(current_);
  current_ = scan();
  return t;
}

void Lexer::skip_blank() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '\n') {
      ++pos_;
      ++line_;
      column_ = 1;
    } else if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos_;
      ++column_;
    } else {
      break;
    }
  }
}

Token Lexer::scan() {
  skip_blank();
  Token t;
  t.line = line_;
  t.column = column_;
  if (pos_ >= text_.size()) {
    t.kind = Tok::End;
    return t;
  }
  const bool first_on_line = last_token_line_ != line_;
  last_token_line_ = line_;

  char c = text_[pos_];
  auto single = [&](Tok k) {
    t.kind = k;
    t.text = std::string(1, c);
    ++pos_;
    ++column_;
    return t;
  };
  switch (c) {
    case '~': return single(Tok::Not);
    case '&': return single(Tok::And);
    case '|': return single(Tok::Or);
    case '(': return single(Tok::LParen);
    case ')': return single(Tok::RParen);
    case ':': return single(Tok::Colon);
    case ',': return single(Tok::Comma);
    case '/': return single(Tok::Slash);
    case '.': return single(Tok::Dot);
    case '-':
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        t.kind = Tok::Arrow;
        t.text = "->";
        pos_ += 2;
        column_ += 2;
        return t;
      }
      break;
    default:
      break;
  }
  if (std::isalpha(static_cast<unsigned char>(c))) {
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      ++end;
    }
    t.text = std::string(text_.substr(pos_, end - pos_));
    column_ += end - pos_;
    pos_ = end;
    if (sections_ && first_on_line && (t.text == "W" || t.text == "D") &&
        pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      ++column_;
      t.kind = Tok::Section;
    } else if (t.text == "true") {
      t.kind = Tok::True;
    } else if (t.text == "false") {
      t.kind = Tok::False;
    } else {
      t.kind = Tok::Ident;
    }
    return t;
  }
  throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
}

Formula FormulaParser::parse() { return implication(); }

Formula FormulaParser::implication() {
  Formula lhs = disjunction();
  if (lex_.peek().kind == Tok::Arrow) {
    lex_.next();
    return Formula::implication(lhs, implication());
  }
  return lhs;
}

Formula FormulaParser::disjunction() {
  Formula f = conjunction();
  while (lex_.peek().kind == Tok::Or) {
    lex_.next();
    f = Formula::disjunction(f, conjunction());
  }
  return f;
}

Formula FormulaParser::conjunction() {
  Formula f = unary();
  while (lex_.peek().kind == Tok::And) {
    lex_.next();
    f = Formula::conjunction(f, unary());
  }
  return f;
}

Formula FormulaParser::unary() {
  const Token& t = lex_.peek();
  switch (t.kind) {
    case Tok::Not:
      lex_.next();
      return Formula::negation(unary());
    case Tok::LParen: {
      lex_.next();
      Formula f = implication();
      expect(lex_, Tok::RParen);
      return f;
    }
    case Tok::True:
      lex_.next();
      return Formula::constant(true);
    case Tok::False:
      lex_.next();
      return Formula::constant(false);
    case Tok::Ident: {
      Token id = lex_.next();
      return Formula::atom(id.text);
    }
    default: {
      std::string got = describe(t.kind);
      fail_at(t, "expected a formula, found " + got);
    }
  }
}

}  // namespace gadel::detail
