#include "doctest.h"

#include "gadel/oracle.hpp"
#include "gadel/problems.hpp"
#include "gadel/theory.hpp"
#include "support/enumerate.hpp"
#include "support/generators.hpp"

using gadel::Formula;
using gadel::parse_formula;
using gadel::parse_theory;

TEST_CASE("parse a three-default theory") {
  const auto t = parse_theory("W: a. b|c.\nD: a : ~b / d. c : e / e. d : f / g.");
  REQUIRE(t.facts.size() == 2);
  CHECK(t.facts[0] == parse_formula("a"));
  CHECK(t.facts[1] == parse_formula("b | c"));
  REQUIRE(t.defaults.size() == 3);
  CHECK(t.defaults[0].prereq == parse_formula("a"));
  REQUIRE(t.defaults[0].justifs.size() == 1);
  CHECK(t.defaults[0].justifs[0] == parse_formula("~b"));
  CHECK(t.defaults[0].conseq == parse_formula("d"));
  CHECK(t.defaults[2].conseq == parse_formula("g"));
  for (std::size_t i = 0; i < t.defaults.size(); ++i) CHECK(t.defaults[i].id == i);
}

TEST_CASE("prerequisite-free self-blocking default with empty facts") {
  const auto t = parse_theory("W:\nD: : b / ~b.");
  CHECK(t.facts.empty());
  REQUIRE(t.defaults.size() == 1);
  CHECK(t.defaults[0].prereq.connective() == gadel::Connective::True);
  CHECK(gadel::is_self_blocking(t.defaults[0]));
}

TEST_CASE("missing sections are empty") {
  const auto t = parse_theory("W: a.");
  CHECK(t.facts.size() == 1);
  CHECK(t.defaults.empty());
  CHECK(parse_theory("").defaults.empty());
  CHECK(parse_theory("# only a comment\n").facts.empty());
}

TEST_CASE("sections in either order, comments, multiple justifications") {
  const auto t = parse_theory(
      "# people fragment\n"
      "D: adult : ~student, ~priest / married.  # two justifications\n"
      "   kid : / toys.\n"
      "W: adult.\n");
  CHECK(t.facts.size() == 1);
  REQUIRE(t.defaults.size() == 2);
  CHECK(t.defaults[0].justifs.size() == 2);
  CHECK(t.defaults[1].justifs.empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_theory("W: a.\nW: b."), gadel::ParseError);
  CHECK_THROWS_AS(parse_theory("D: a : b / c. D: d : e / f."), gadel::ParseError);
  CHECK_THROWS_AS(parse_theory("a."), gadel::ParseError);
  CHECK_THROWS_AS(parse_theory("W: a"), gadel::ParseError);
  CHECK_THROWS_AS(parse_theory("D: a : b c."), gadel::ParseError);
  CHECK_THROWS_AS(parse_theory("D: a : b / ."), gadel::ParseError);
  try {
    parse_theory("W: a.\nD: a : b / c.\nW: d.");
    FAIL("expected a parse error");
  } catch (const gadel::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
  CHECK_THROWS_AS(gadel::load_theory("/nonexistent/theory.dl"), std::runtime_error);
}

TEST_CASE("fixture files load") {
  const auto t = gadel::load_theory(std::string(GADEL_DATA_DIR) + "/two.dl");
  CHECK(t.facts.size() == 2);
  CHECK(t.defaults.size() == 2);
}

TEST_CASE("printing round-trips") {
  for (const char* name : {"unique.dl", "two.dl", "none.dl"}) {
    const auto t = gadel::load_theory(std::string(GADEL_DATA_DIR) + "/" + name);
    CHECK(parse_theory(gadel::to_string(t)) == t);
  }
  gadel::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const auto t = gadel::testing::random_theory(rng, 6, 6);
    CHECK(parse_theory(gadel::to_string(t)) == t);
  }
  for (auto v : gadel::problems::kAllPeopleVariants) {
    const auto t = gadel::problems::generate_people(v);
    CHECK(parse_theory(gadel::to_string(t)) == t);
  }
}

TEST_CASE("preprocess moves the self-blocking default out of the chromosome") {
  const auto p = gadel::preprocess(parse_theory("W: a.\nD: a : b / ~b."));
  CHECK(p.encoded.empty());
  CHECK(p.constraints == std::vector<std::size_t>{0});
  CHECK(p.chromosome_length() == 0);
}

TEST_CASE("preprocess forces bits entailed by the facts") {
  const auto p = gadel::preprocess(parse_theory("W: a.\nD: a : b / c."));
  REQUIRE(p.forced.size() == 1);
  CHECK(p.forced[0].prereq);
  CHECK_FALSE(p.forced[0].justif);

  const auto q = gadel::preprocess(parse_theory("W: ~e.\nD: c : e / e."));
  REQUIRE(q.forced.size() == 1);
  CHECK_FALSE(q.forced[0].prereq);
  CHECK(q.forced[0].justif);

  const auto r = gadel::preprocess(parse_theory("W: ~e.\nD: c : e / e."), {true, false});
  CHECK(r.forced[0] == gadel::ForcedBits{});
}

TEST_CASE("self-blocking detection is syntactic") {
  const auto t = parse_theory("D: a : ~~b / ~b. a : ~b / ~~b. a : b / ~c. a : b & c / ~c | ~b. a : b, c / ~b.");
  CHECK(gadel::is_self_blocking(t.defaults[0]));
  CHECK(gadel::is_self_blocking(t.defaults[1]));
  CHECK_FALSE(gadel::is_self_blocking(t.defaults[2]));
  // Equivalent to a self-blocking default but written differently.
  CHECK_FALSE(gadel::is_self_blocking(t.defaults[3]));
  CHECK_FALSE(gadel::is_self_blocking(t.defaults[4]));
}

TEST_CASE("preprocessing never changes the certified extensions") {
  gadel::Rng rng(8);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    auto t = gadel::testing::random_theory(rng, 5, 5);
    if (!gadel::is_consistent(t.facts)) continue;
    const auto raw = gadel::testing::certified_sets(gadel::preprocess(t, {false, false}));
    const auto pre = gadel::testing::certified_sets(gadel::preprocess(t));
    CAPTURE(gadel::to_string(t));
    CHECK(raw == pre);
    std::set<std::vector<std::size_t>> oracle;
    for (const auto& rec : gadel::oracle::all_extensions(t)) oracle.insert(rec.generating_ids);
    CHECK(pre == oracle);
    ++checked;
  }
  CHECK(checked >= 40);
}
