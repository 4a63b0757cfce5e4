#include "doctest.h"

#include <vector>

#include "gadel/cnf.hpp"
#include "gadel/problems.hpp"
#include "gadel/prover.hpp"
#include "gadel/sat.hpp"
#include "support/generators.hpp"
#include "support/truth_table.hpp"

using gadel::Formula;
using gadel::parse_formula;

namespace {

std::vector<Formula> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse_formula(t));
  return out;
}

}  // namespace

TEST_CASE("to_cnf of constants and contradictions") {
  const auto t = gadel::to_cnf(Formula::constant(true));
  CHECK(t.clauses().empty());
  CHECK(gadel::is_satisfiable(t));

  const auto f = gadel::to_cnf(Formula::constant(false));
  REQUIRE(f.clauses().size() == 1);
  CHECK(f.clauses().front().empty());
  CHECK_FALSE(gadel::is_satisfiable(f));

  const auto c = gadel::to_cnf(parse_formula("a & ~a"));
  REQUIRE(c.clauses().size() == 2);
  CHECK(c.clauses()[0].size() == 1);
  CHECK(c.clauses()[1].size() == 1);
  CHECK(c.clauses()[0][0] == ~c.clauses()[1][0]);
  CHECK_FALSE(gadel::is_satisfiable(c));
}

TEST_CASE("clause sets never hold tautologies") {
  const auto cs = gadel::to_cnf(parse_formula("(a | ~a) & (b | c | ~b) & (d | e)"));
  REQUIRE(cs.clauses().size() == 1);
  CHECK(cs.clauses().front().size() == 2);
  gadel::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto cnf = gadel::to_cnf(gadel::testing::random_formula(rng, 5, 5));
    for (const auto& clause : cnf.clauses()) {
      for (std::size_t a = 0; a < clause.size(); ++a) {
        for (std::size_t b = a + 1; b < clause.size(); ++b) CHECK(clause[a].var() != clause[b].var());
      }
    }
  }
}

TEST_CASE("satisfiability of small clause sets") {
  CHECK(gadel::is_satisfiable(gadel::ClauseSet{}));
  CHECK_FALSE(gadel::is_satisfiable(gadel::to_cnf(parse_formula("(a | b) & ~a & ~b"))));
  CHECK(gadel::is_satisfiable(gadel::to_cnf(parse_formula("(a | b) & ~a"))));
  // Pigeonhole 3 into 2 needs search beyond propagation.
  const char* php =
      "(p11 | p12) & (p21 | p22) & (p31 | p32) & (~p11 | ~p21) & (~p11 | ~p31) & (~p21 | ~p31) &"
      "(~p12 | ~p22) & (~p12 | ~p32) & (~p22 | ~p32)";
  CHECK_FALSE(gadel::is_satisfiable(gadel::to_cnf(parse_formula(php))));
}

TEST_CASE("solver models satisfy their clauses") {
  gadel::Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gadel::testing::random_formula(rng, 8, 6);
    const auto cs = gadel::to_cnf(f);
    const auto m = gadel::DpllSolver(cs).solve();
    if (!m) continue;
    for (const auto& clause : cs.clauses()) {
      bool sat = false;
      for (gadel::Lit l : clause) sat |= (*m)[l.var()] == l.positive();
      CHECK(sat);
    }
  }
}

TEST_CASE("entailment examples") {
  const auto base = parse_all({"a", "b | c"});
  CHECK(gadel::entails(base, parse_formula("a")));
  CHECK_FALSE(gadel::entails(parse_all({"a"}), parse_formula("b")));
  const auto w1 = parse_all({"a", "b | c", "d", "g"});
  CHECK(gadel::entails(w1, parse_formula("d")));
  CHECK(gadel::entails(w1, parse_formula("d & g & (b | c)")));
  CHECK(gadel::entails({}, parse_formula("a | ~a")));
  CHECK(gadel::entails(parse_all({"a", "~a"}), parse_formula("anything")));
}

TEST_CASE("consistency examples") {
  CHECK(gadel::is_consistent({}));
  CHECK_FALSE(gadel::is_consistent(parse_all({"a", "~a"})));
  CHECK(gadel::is_consistent(parse_all({"a -> b", "a", "~c"})));
}

TEST_CASE("people facts with each variant are consistent") {
  for (auto v : gadel::problems::kAllPeopleVariants) {
    const auto t = gadel::problems::generate_people(v);
    CHECK(gadel::is_consistent(t.facts));
  }
}

// Cross-check of the prover against enumeration on a reduced People
// signature: the background clauses restricted to those over at most 12 atoms.
TEST_CASE("people-style clauses agree with truth tables at reduced size") {
  const auto base = parse_all({"~boy | ~girl", "~boy | kid", "~girl | kid", "~human | male | female",
                               "~kid | human", "~student | human", "~adult | human", "~adult | ~kid",
                               "~adult | ~male | man", "~adult | ~female | woman", "boy"});
  for (const char* goal : {"kid", "human", "~adult", "~girl", "male | female", "man", "~man", "woman"}) {
    CAPTURE(goal);
    CHECK(gadel::entails(base, parse_formula(goal)) ==
          gadel::testing::tt_entails(base, parse_formula(goal)));
  }
  CHECK(gadel::is_consistent(base) == gadel::testing::tt_satisfiable(base));
}

TEST_CASE("knowledge base caches do not change answers") {
  gadel::Rng rng(5);
  for (int round = 0; round < 40; ++round) {
    std::vector<Formula> base;
    for (int i = 0; i < 4; ++i) base.push_back(gadel::testing::random_formula(rng, 7, 3));
    gadel::KnowledgeBase kb(base);
    for (int q = 0; q < 30; ++q) {
      const Formula goal = gadel::testing::random_formula(rng, 7, 3);
      const bool expected = gadel::testing::tt_entails(base, goal);
      CHECK(kb.entails(goal) == expected);
      CHECK(kb.entails(goal) == expected);  // memo hit
    }
  }
}

TEST_CASE("entailment agrees with truth tables on random formulas") {
  gadel::Rng rng(2024);
  int agree = 0;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gadel::testing::random_formula(rng, 12, 6);
    const bool expected = gadel::testing::tt_entails({}, f);
    agree += gadel::entails({}, f) == expected;
  }
  CHECK(agree == 1000);
}

TEST_CASE("entailment is monotone in the base") {
  gadel::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    std::vector<Formula> base{gadel::testing::random_formula(rng, 6, 3),
                              gadel::testing::random_formula(rng, 6, 3)};
    const Formula goal = gadel::testing::random_formula(rng, 6, 3);
    if (!gadel::entails(base, goal)) continue;
    base.push_back(gadel::testing::random_formula(rng, 6, 3));
    CHECK(gadel::entails(base, goal));
  }
}

TEST_CASE("consistency is non-entailment of false") {
  gadel::Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    std::vector<Formula> base{gadel::testing::random_formula(rng, 5, 3),
                              gadel::testing::random_formula(rng, 5, 3)};
    CHECK(gadel::is_consistent(base) == !gadel::entails(base, Formula::constant(false)));
    CHECK(gadel::is_consistent(base) == gadel::testing::tt_satisfiable(base));
  }
}

TEST_CASE("large goals fall back to compiled negation") {
  // Distribution of this goal exceeds the clause limit.
  std::string goal = "(x0 & y0)";
  for (int i = 1; i < 7; ++i) goal += " | (x" + std::to_string(i) + " & y" + std::to_string(i) + ")";
  const Formula g = parse_formula(goal);
  const auto base = parse_all({"x3", "y3"});
  CHECK(gadel::entails(base, g));
  CHECK_FALSE(gadel::entails(parse_all({"x3", "y4"}), g));
  CHECK(gadel::entails(base, g) == gadel::testing::tt_entails(base, g));
}
