// gadel: search extensions of propositional default theories.
//
//   gadel solve theory.dl
//   gadel solve --people woman --trials 20 --json
//   gadel solve --hamilton 3 --edges 0-1,1-2,2-0 --pop-size 465
//   gadel solve theory.dl --oracle
//   gadel solve theory.dl --verify 100011

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gadel/bench.hpp"
#include "gadel/oracle.hpp"
#include "gadel/prover.hpp"
#include "gadel/verify.hpp"
#include "json.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitError = 1;
constexpr int kExitExhausted = 2;
constexpr int kExitNoExtension = 3;

using gadel::bench::LoadedProblem;

std::string ids_text(const std::vector<std::size_t>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + std::to_string(ids[i]);
  return s + "}";
}

int run_oracle(const LoadedProblem& p, bool json) {
  const auto records = gadel::oracle::all_extensions(p.theory);
  if (json) {
    nlohmann::json j;
    j["problem"] = p.label;
    j["oracle"] = true;
    j["count"] = records.size();
    j["extensions"] = nlohmann::json::array();
    for (const auto& r : records) {
      j["extensions"].push_back(gadel::bench::to_json(gadel::bench::summarize(p, r.generating_ids)));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.label << ": " << records.size() << " extension(s)\n";
    for (const auto& r : records) {
      const auto s = gadel::bench::summarize(p, r.generating_ids);
      std::cout << "  generating defaults " << ids_text(r.generating_ids) << ":";
      for (const auto& f : s.consequent_formulas) std::cout << " [" << f << "]";
      std::cout << "\n";
    }
  }
  return records.empty() ? kExitNoExtension : kExitFound;
}

int run_verify(const LoadedProblem& p, const std::string& bits, const gadel::GAParams& params,
               bool json) {
  const gadel::PreprocessedTheory pre = gadel::preprocess(p.theory);
  const auto g = gadel::Chromosome::from_string(bits);
  const gadel::Verification v = gadel::verify_extension(g, pre, params.representation);
  if (json) {
    nlohmann::json j = {
        {"problem", p.label},
        {"chromosome", bits},
        {"verdict", gadel::to_string(v.verdict)},
        {"reason", v.reason()},
        {"fitness", {v.fitness.penalty, v.fitness.cardinality}},
    };
    if (v.certified()) j["extension"] = gadel::bench::to_json(gadel::bench::summarize(p, v.cgd.ids));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << bits << ": " << v.reason() << " (eval = (" << v.fitness.penalty << ", "
              << v.fitness.cardinality << "))\n";
    if (v.certified()) std::cout << "  generating defaults " << ids_text(v.cgd.ids) << "\n";
  }
  return v.certified() ? kExitFound : kExitExhausted;
}

int run_search(const LoadedProblem& p, const gadel::GAParams& params, std::size_t trials,
               std::size_t jobs, bool json) {
  const auto agg = gadel::bench::run(p, params, trials, jobs);
  if (json) {
    std::cout << gadel::bench::to_json(agg).dump(2) << "\n";
  } else if (agg.inconsistent_facts) {
    std::cout << p.label << ": facts are inconsistent; the only extension is the inconsistent theory\n";
  } else {
    std::cout << p.label << ": " << agg.successes << "/" << agg.trials << " trials found an extension";
    if (agg.ng_mean) std::cout << ", mean generations " << *agg.ng_mean;
    std::cout << "\n";
    if (agg.extension) {
      std::cout << "  generating defaults " << ids_text(agg.extension->generating_default_ids) << ":";
      for (const auto& f : agg.extension->consequent_formulas) std::cout << " [" << f << "]";
      std::cout << "\n";
      if (agg.extension->cycle) {
        std::cout << "  cycle:";
        for (std::size_t v : *agg.extension->cycle) std::cout << " " << v;
        std::cout << " 0\n";
      }
    }
  }
  if (agg.trials == 0) return kExitFound;
  return agg.successes > 0 ? kExitFound : kExitExhausted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genetic extension search for propositional default theories"};
  app.require_subcommand(1);
  CLI::App* solve = app.add_subcommand("solve", "Search, enumerate, or verify extensions");

  std::string file;
  std::string people;
  std::optional<std::size_t> hamilton;
  std::string edges;
  gadel::GAParams params;
  std::size_t trials = 1;
  std::size_t jobs = 1;
  bool oracle = false;
  std::string verify;
  bool json = false;
  bool one_bit = false;

  solve->add_option("file", file, "Theory file");
  solve->add_option("--people", people, "People variant: boy, girl, man, woman, man_student, woman_student");
  solve->add_option("--hamilton", hamilton, "Hamiltonian cycle instance with N vertices");
  solve->add_option("--edges", edges, "Directed edges, e.g. 0-1,1-2,2-0");
  solve->add_option("--pc", params.crossover_rate, "Crossover probability")->capture_default_str();
  solve->add_option("--pm", params.mutation_rate, "Per-bit mutation probability")->capture_default_str();
  solve->add_option("--pop-size", params.population_size, "Population size")->capture_default_str();
  solve->add_option("--max-gens", params.max_generations, "Generation budget")->capture_default_str();
  solve->add_option("--seed", params.seed, "Base random seed")->capture_default_str();
  solve->add_option("--trials", trials, "Independent trials")->capture_default_str();
  solve->add_option("--rank-levels", params.rank_levels, "Rank replication levels")->capture_default_str();
  solve->add_option("--jobs", jobs, "Trials run concurrently")->capture_default_str();
  solve->add_flag("--any-cut,--paper-literal-crossover", params.any_cut_crossover,
                  "Cut anywhere instead of between genes");
  solve->add_flag("--one-bit", one_bit, "One bit per default instead of two");
  solve->add_flag("--oracle", oracle, "Enumerate all extensions exhaustively");
  solve->add_option("--verify", verify, "Verify one chromosome (string of 0/1)");
  solve->add_flag("--json", json, "Machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (one_bit) params.representation = gadel::Representation::OneBit;
    gadel::bench::ProblemSpec spec;
    const int sources = !file.empty() + !people.empty() + hamilton.has_value();
    if (sources != 1) {
      std::cerr << "error: give exactly one of FILE, --people, --hamilton\n";
      return kExitError;
    }
    if (!people.empty()) {
      spec.kind = gadel::bench::ProblemKind::People;
      spec.variant = gadel::problems::parse_people_variant(people);
    } else if (hamilton) {
      spec.kind = gadel::bench::ProblemKind::Hamilton;
      spec.vertices = *hamilton;
      spec.edges = gadel::problems::parse_edges(edges);
    } else {
      spec.kind = gadel::bench::ProblemKind::File;
      spec.path = file;
    }
    const LoadedProblem problem = gadel::bench::load(spec);

    if (oracle) return run_oracle(problem, json);
    if (!verify.empty()) return run_verify(problem, verify, params, json);
    return run_search(problem, params, trials, jobs, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
