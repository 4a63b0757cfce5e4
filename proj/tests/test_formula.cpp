#include "doctest.h"

#include "gadel/formula.hpp"
#include "gadel/rng.hpp"
#include "support/generators.hpp"

using gadel::Connective;
using gadel::Formula;
using gadel::parse_formula;

namespace {
Formula A(const char* n) { return Formula::atom(n); }
}  // namespace

TEST_CASE("atoms are interned") {
  CHECK(gadel::AtomTable::intern("kid") == gadel::AtomTable::intern("kid"));
  CHECK(gadel::AtomTable::intern("kid") != gadel::AtomTable::intern("kid2"));
  CHECK(A("kid") == A("kid"));
  CHECK(gadel::AtomTable::name(gadel::AtomTable::intern("toys")) == "toys");
  CHECK_THROWS_AS(Formula::atom("9lives"), std::invalid_argument);
  CHECK_THROWS_AS(Formula::atom(""), std::invalid_argument);
}

TEST_CASE("parse single atom and constants") {
  CHECK(parse_formula("a") == A("a"));
  CHECK(parse_formula("true").connective() == Connective::True);
  CHECK(parse_formula("false").connective() == Connective::False);
}

TEST_CASE("parse a disjunction") {
  CHECK(parse_formula("b | c") == Formula::disjunction(A("b"), A("c")));
}

TEST_CASE("disjunction is left associative") {
  const Formula expected = Formula::disjunction(
      Formula::disjunction(Formula::negation(A("adult")), Formula::negation(A("male"))), A("man"));
  CHECK(parse_formula("~adult | ~male | man") == expected);
}

TEST_CASE("precedence: ~ over & over | over ->, implication right associative") {
  CHECK(parse_formula("~a & b") == Formula::conjunction(Formula::negation(A("a")), A("b")));
  CHECK(parse_formula("a | b & c") == Formula::disjunction(A("a"), Formula::conjunction(A("b"), A("c"))));
  CHECK(parse_formula("a -> b -> c") ==
        Formula::implication(A("a"), Formula::implication(A("b"), A("c"))));
  CHECK(parse_formula("a | b -> c") ==
        Formula::implication(Formula::disjunction(A("a"), A("b")), A("c")));
  CHECK(parse_formula("(a | b) & c") ==
        Formula::conjunction(Formula::disjunction(A("a"), A("b")), A("c")));
  CHECK(parse_formula("~~a") == Formula::negation(Formula::negation(A("a"))));
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_formula("a & (b | )");
    FAIL("expected a parse error");
  } catch (const gadel::ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(parse_formula(""), gadel::ParseError);
  CHECK_THROWS_AS(parse_formula("a b"), gadel::ParseError);
  CHECK_THROWS_AS(parse_formula("a - b"), gadel::ParseError);
  CHECK_THROWS_AS(parse_formula("(a"), gadel::ParseError);
  CHECK_THROWS_AS(parse_formula("a $ b"), gadel::ParseError);
}

TEST_CASE("printing round-trips through the parser") {
  gadel::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const Formula f = gadel::testing::random_formula(rng, 6, 5);
    const std::string text = gadel::to_string(f);
    CAPTURE(text);
    CHECK(parse_formula(text) == f);
  }
  CHECK(gadel::to_string(parse_formula("a & (b & c)")) == "a & (b & c)");
  CHECK(gadel::to_string(parse_formula("(a -> b) -> c")) == "(a -> b) -> c");
  CHECK(gadel::to_string(parse_formula("~(a | b)")) == "~(a | b)");
}

TEST_CASE("double negations are stripped at any depth") {
  CHECK(gadel::strip_double_negations(parse_formula("~~b")) == A("b"));
  CHECK(gadel::strip_double_negations(parse_formula("~~~b")) == parse_formula("~b"));
  CHECK(gadel::strip_double_negations(parse_formula("a & ~~(c | ~~d)")) == parse_formula("a & (c | d)"));
}

TEST_CASE("structural equality is not semantic equality") {
  CHECK(parse_formula("a | b") != parse_formula("b | a"));
  CHECK(parse_formula("a & b").hash() == parse_formula("a & b").hash());
}
