#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gadel/ga.hpp"
#include "gadel/problems.hpp"
#include "gadel/theory.hpp"
#include "json.hpp"

namespace gadel::bench {

enum class ProblemKind { File, People, Hamilton };

struct ProblemSpec {
  ProblemKind kind = ProblemKind::File;
  std::string path;
  problems::PeopleVariant variant = problems::PeopleVariant::Boy;
  std::size_t vertices = 0;
  std::vector<problems::Edge> edges;

  std::string label() const;
};

struct LoadedProblem {
  std::string label;
  DefaultTheory theory;
  std::optional<problems::HamiltonInstance> hamilton;
};

/// Reads or generates the theory. File and parse errors propagate.
LoadedProblem load(const ProblemSpec& spec);

struct ExtensionSummary {
  std::vector<std::size_t> generating_default_ids;
  std::vector<std::string> consequent_formulas;
  std::optional<std::vector<std::size_t>> cycle;  // Hamiltonian problems only
};

struct TrialResult {
  std::uint64_t seed = 0;
  std::string outcome;  // "found", "exhausted", "inconsistent-facts"
  std::size_t generations = 0;
  std::size_t penalty_trace_len = 0;
  std::uint64_t entailment_queries = 0;
  double wall_seconds = 0.0;
  std::optional<ExtensionSummary> extension;
};

struct TrialAggregate {
  std::string problem;
  GAParams params;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::optional<double> ng_mean;  // over found trials only
  double wall_time_mean = 0.0;    // informational
  bool inconsistent_facts = false;
  std::vector<TrialResult> per_trial;
  std::optional<ExtensionSummary> extension;  // from the first found trial
};

/// Per-trial seed i is mix_seed(params.seed, i); results do not depend on
/// `jobs`. Inconsistent facts short-circuit: the single extension is the
/// inconsistent theory and no search runs.
TrialAggregate run(const LoadedProblem& problem, const GAParams& params, std::size_t trials,
                   std::size_t jobs = 1);

ExtensionSummary summarize(const LoadedProblem& problem, const std::vector<std::size_t>& ids);

/// Report document. Wall-time fields are omitted when `timing` is false.
nlohmann::json to_json(const TrialAggregate& agg, bool timing = true);
nlohmann::json to_json(const GAParams& p);
nlohmann::json to_json(const ExtensionSummary& e);

}  // namespace gadel::bench
