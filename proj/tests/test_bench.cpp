#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "gadel/bench.hpp"
#include "gadel/oracle.hpp"

namespace bench = gadel::bench;

namespace {

bench::LoadedProblem fixture(const char* name) {
  bench::ProblemSpec spec;
  spec.kind = bench::ProblemKind::File;
  spec.path = std::string(GADEL_DATA_DIR) + "/" + name;
  return bench::load(spec);
}

gadel::GAParams small() {
  gadel::GAParams p;
  p.population_size = 30;
  p.max_generations = 30;
  p.seed = 4;
  return p;
}

}  // namespace

TEST_CASE("zero trials give an empty aggregate") {
  const auto agg = bench::run(fixture("unique.dl"), small(), 0);
  CHECK(agg.trials == 0);
  CHECK(agg.successes == 0);
  CHECK(agg.per_trial.empty());
  CHECK_FALSE(agg.ng_mean.has_value());
  CHECK(bench::to_json(agg, false)["ng_mean"].is_null());
}

TEST_CASE("theory without extension never succeeds") {
  const auto agg = bench::run(fixture("none.dl"), small(), 3);
  CHECK(agg.successes == 0);
  for (const auto& t : agg.per_trial) CHECK(t.outcome == "exhausted");
}

TEST_CASE("unique extension is reported with its consequents") {
  const auto agg = bench::run(fixture("unique.dl"), small(), 4);
  CHECK(agg.successes == 4);
  REQUIRE(agg.extension.has_value());
  CHECK(agg.extension->generating_default_ids == std::vector<std::size_t>{0, 2});
  CHECK(agg.extension->consequent_formulas == std::vector<std::string>{"d", "g"});
}

TEST_CASE("inconsistent facts short-circuit") {
  const std::string path = "gadel_bench_inconsistent.dl";
  {
    std::ofstream out(path);
    out << "W: a. ~a.\nD: a : b / b.\n";
  }
  bench::ProblemSpec spec;
  spec.path = path;
  const auto agg = bench::run(bench::load(spec), small(), 2);
  std::remove(path.c_str());
  CHECK(agg.inconsistent_facts);
  REQUIRE(agg.per_trial.size() == 2);
  for (const auto& t : agg.per_trial) {
    CHECK(t.outcome == "inconsistent-facts");
    CHECK(t.generations == 0);
  }
  CHECK(bench::to_json(agg, false)["inconsistent_facts"] == true);
}

TEST_CASE("missing file propagates") {
  bench::ProblemSpec spec;
  spec.path = "/nonexistent/x.dl";
  CHECK_THROWS(bench::load(spec));
}

TEST_CASE("per-trial seeds are derived and reports are deterministic") {
  const auto problem = fixture("two.dl");
  const auto a = bench::run(problem, small(), 5, 1);
  const auto b = bench::run(problem, small(), 5, 3);
  for (std::size_t i = 0; i < a.per_trial.size(); ++i) {
    CHECK(a.per_trial[i].seed == gadel::mix_seed(4, i));
  }
  CHECK(bench::to_json(a, false).dump() == bench::to_json(b, false).dump());
  const auto j = bench::to_json(a, true);
  for (const char* key : {"problem", "params", "trials", "successes", "ng_mean", "per_trial", "extension"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["per_trial"][0].contains("wall_seconds"));
  CHECK_FALSE(bench::to_json(a, false)["per_trial"][0].contains("wall_seconds"));
}

TEST_CASE("hamilton problems carry the decoded cycle") {
  bench::ProblemSpec spec;
  spec.kind = bench::ProblemKind::Hamilton;
  spec.vertices = 3;
  spec.edges = gadel::problems::parse_edges("0-1,1-2,2-0");
  gadel::GAParams p = small();
  p.max_generations = 200;
  const auto agg = bench::run(bench::load(spec), p, 2);
  REQUIRE(agg.extension.has_value());
  REQUIRE(agg.extension->cycle.has_value());
  CHECK(*agg.extension->cycle == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("found trials pass the fixpoint check") {
  bench::ProblemSpec ham;
  ham.kind = bench::ProblemKind::Hamilton;
  ham.vertices = 3;
  ham.edges = gadel::problems::parse_edges("0-1,1-0,0-2,2-0,1-2,2-1");
  for (const auto& problem : {fixture("unique.dl"), fixture("two.dl"), bench::load(ham)}) {
    REQUIRE(problem.theory.defaults.size() <= gadel::oracle::kDefaultBound);
    gadel::GAParams p = small();
    p.max_generations = 200;
    const auto agg = bench::run(problem, p, 6);
    for (const auto& t : agg.per_trial) {
      if (t.outcome != "found") continue;
      CHECK(gadel::oracle::check_extension(t.extension->generating_default_ids, problem.theory));
    }
  }
}
