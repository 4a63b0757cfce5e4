#include "gadel/theory.hpp"

#include <fstream>
#include <sstream>

#include "gadel/prover.hpp"
#include "lexer.hpp"

namespace gadel {

using detail::Tok;

const Default& DefaultTheory::add_default(Formula prereq, std::vector<Formula> justifs,
                                          Formula conseq) {
  Default d;
  d.id = defaults.size();
  d.prereq = std::move(prereq);
  d.justifs = std::move(justifs);
  d.conseq = std::move(conseq);
  defaults.push_back(std::move(d));
  return defaults.back();
}

namespace {

bool at_item_end(const detail::Lexer& lex) {
  const Tok k = lex.peek().kind;
  return k == Tok::Section || k == Tok::End;
}

void parse_facts(detail::Lexer& lex, DefaultTheory& t) {
  while (!at_item_end(lex)) {
    t.facts.push_back(detail::FormulaParser(lex).parse());
    detail::expect(lex, Tok::Dot);
  }
}

void parse_defaults(detail::Lexer& lex, DefaultTheory& t) {
  while (!at_item_end(lex)) {
    Formula prereq = Formula::constant(true);
    if (lex.peek().kind != Tok::Colon) prereq = detail::FormulaParser(lex).parse();
    detail::expect(lex, Tok::Colon);
    std::vector<Formula> justifs;
    if (lex.peek().kind != Tok::Slash) {
      justifs.push_back(detail::FormulaParser(lex).parse());
      while (lex.peek().kind == Tok::Comma) {
        lex.next();
        justifs.push_back(detail::FormulaParser(lex).parse());
      }
    }
    detail::expect(lex, Tok::Slash);
    Formula conseq = detail::FormulaParser(lex).parse();
    detail::expect(lex, Tok::Dot);
    t.add_default(std::move(prereq), std::move(justifs), std::move(conseq));
  }
}

}  // namespace

DefaultTheory parse_theory(std::string_view text) {
  detail::Lexer lex(text, true);
  DefaultTheory t;
  bool seen_w = false;
  bool seen_d = false;
  while (lex.peek().kind != Tok::End) {
    if (lex.peek().kind != Tok::Section) {
      detail::fail_at(lex.peek(), "expected section header 'W:' or 'D:'");
    }
    detail::Token header = lex.next();
    bool& seen = header.text == "W" ? seen_w : seen_d;
    if (seen) detail::fail_at(header, "duplicate section '" + header.text + ":'");
    seen = true;
    if (header.text == "W") {
      parse_facts(lex, t);
    } else {
      parse_defaults(lex, t);
    }
  }
  return t;
}

DefaultTheory load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open theory file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_theory(ss.str());
}

std::string to_string(const Default& d) {
  std::string out;
  if (d.prereq.connective() != Connective::True) out += to_string(d.prereq) + " ";
  out += ": ";
  for (std::size_t i = 0; i < d.justifs.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(d.justifs[i]);
  }
  if (!d.justifs.empty()) out += " ";
  out += "/ " + to_string(d.conseq);
  return out;
}

std::string to_string(const DefaultTheory& t) {
  std::string out = "W:\n";
  for (const Formula& f : t.facts) out += "  " + to_string(f) + ".\n";
  out += "D:\n";
  for (const Default& d : t.defaults) out += "  " + to_string(d) + ".\n";
  return out;
}

bool is_self_blocking(const Default& d) {
  if (d.justifs.size() != 1) return false;
  return strip_double_negations(d.conseq) ==
         strip_double_negations(Formula::negation(d.justifs.front()));
}

PreprocessedTheory preprocess(DefaultTheory t, const PreprocessOptions& opts) {
  PreprocessedTheory p;
  KnowledgeBase facts(t.facts);
  for (const Default& d : t.defaults) {
    if (opts.extract_constraints && is_self_blocking(d)) {
      p.constraints.push_back(d.id);
      continue;
    }
    p.encoded.push_back(d.id);
    ForcedBits fb;
    if (opts.force_bits) {
      fb.prereq = facts.entails(d.prereq);
      for (const Formula& j : d.justifs) {
        if (facts.entails(Formula::negation(j))) {
          fb.justif = true;
          break;
        }
      }
    }
    p.forced.push_back(fb);
  }
  p.base = std::move(t);
  return p;
}

}  // namespace gadel
