#include "gadel/bench.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "gadel/prover.hpp"
#include "gadel/rng.hpp"

namespace gadel::bench {

std::string ProblemSpec::label() const {
  switch (kind) {
    case ProblemKind::File: return path;
    case ProblemKind::People: return "people:" + problems::to_string(variant);
    case ProblemKind::Hamilton: {
      std::string s = "hamilton:" + std::to_string(vertices) + ":";
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(edges[i].from) + "-" + std::to_string(edges[i].to);
      }
      return s;
    }
  }
  return {};
}

LoadedProblem load(const ProblemSpec& spec) {
  LoadedProblem p;
  p.label = spec.label();
  switch (spec.kind) {
    case ProblemKind::File:
      p.theory = load_theory(spec.path);
      break;
    case ProblemKind::People:
      p.theory = problems::generate_people(spec.variant);
      break;
    case ProblemKind::Hamilton:
      p.hamilton = problems::generate_hamilton(spec.vertices, spec.edges);
      p.theory = p.hamilton->theory;
      break;
  }
  return p;
}

ExtensionSummary summarize(const LoadedProblem& problem, const std::vector<std::size_t>& ids) {
  ExtensionSummary s;
  s.generating_default_ids = ids;
  for (std::size_t id : ids) s.consequent_formulas.push_back(to_string(problem.theory.defaults[id].conseq));
  if (problem.hamilton) s.cycle = problems::decode_cycle(*problem.hamilton, ids);
  return s;
}

TrialAggregate run(const LoadedProblem& problem, const GAParams& params, std::size_t trials,
                   std::size_t jobs) {
  params.validate();
  TrialAggregate agg;
  agg.problem = problem.label;
  agg.params = params;
  agg.trials = trials;
  agg.per_trial.resize(trials);
  if (trials == 0) return agg;

  if (!is_consistent(problem.theory.facts)) {
    agg.inconsistent_facts = true;
    agg.successes = trials;
    for (std::size_t i = 0; i < trials; ++i) {
      agg.per_trial[i].seed = mix_seed(params.seed, i);
      agg.per_trial[i].outcome = "inconsistent-facts";
    }
    return agg;
  }

  const PreprocessedTheory pre = preprocess(problem.theory);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      GAParams p = params;
      p.seed = mix_seed(params.seed, i);
      const auto start = std::chrono::steady_clock::now();
      const SearchReport r = search(pre, p);
      const auto stop = std::chrono::steady_clock::now();
      TrialResult& tr = agg.per_trial[i];
      tr.seed = p.seed;
      tr.outcome = to_string(r.outcome);
      tr.generations = r.generations_used;
      tr.penalty_trace_len = r.fitness_trace.size();
      tr.entailment_queries = r.entailment_queries;
      tr.wall_seconds = std::chrono::duration<double>(stop - start).count();
      if (r.outcome == Outcome::Found) tr.extension = summarize(problem, r.certificate->cgd.ids);
    }
  };
  const std::size_t n_threads = std::max<std::size_t>(1, std::min(jobs, trials));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  }

  double ng_sum = 0.0;
  double wall_sum = 0.0;
  for (const TrialResult& tr : agg.per_trial) {
    wall_sum += tr.wall_seconds;
    if (tr.outcome != "found") continue;
    ++agg.successes;
    ng_sum += static_cast<double>(tr.generations);
    if (!agg.extension) agg.extension = tr.extension;
  }
  if (agg.successes > 0) agg.ng_mean = ng_sum / static_cast<double>(agg.successes);
  agg.wall_time_mean = wall_sum / static_cast<double>(trials);
  return agg;
}

nlohmann::json to_json(const GAParams& p) {
  return {
      {"pop_size", p.population_size},
      {"pc", p.crossover_rate},
      {"pm", p.mutation_rate},
      {"max_gens", p.max_generations},
      {"seed", p.seed},
      {"rank_levels", p.rank_levels},
      {"any_cut_crossover", p.any_cut_crossover},
      {"representation", p.representation == Representation::TwoBit ? "two-bit" : "one-bit"},
  };
}

nlohmann::json to_json(const ExtensionSummary& e) {
  nlohmann::json j = {
      {"generating_default_ids", e.generating_default_ids},
      {"consequent_formulas", e.consequent_formulas},
  };
  if (e.cycle) j["cycle"] = *e.cycle;
  return j;
}

nlohmann::json to_json(const TrialAggregate& agg, bool timing) {
  nlohmann::json j;
  j["problem"] = agg.problem;
  j["params"] = to_json(agg.params);
  j["trials"] = agg.trials;
  j["successes"] = agg.successes;
  j["ng_mean"] = agg.ng_mean ? nlohmann::json(*agg.ng_mean) : nlohmann::json(nullptr);
  j["inconsistent_facts"] = agg.inconsistent_facts;
  nlohmann::json per = nlohmann::json::array();
  for (const TrialResult& tr : agg.per_trial) {
    nlohmann::json t = {
        {"seed", tr.seed},
        {"outcome", tr.outcome},
        {"generations", tr.generations},
        {"penalty_trace_len", tr.penalty_trace_len},
        {"entailment_queries", tr.entailment_queries},
    };
    if (timing) t["wall_seconds"] = tr.wall_seconds;
    per.push_back(std::move(t));
  }
  j["per_trial"] = std::move(per);
  j["extension"] = agg.extension ? to_json(*agg.extension) : nlohmann::json(nullptr);
  if (timing) j["wall_time_mean"] = agg.wall_time_mean;
  return j;
}

}  // namespace gadel::bench
