#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gadel/chromosome.hpp"
#include "gadel/fitness.hpp"
#include "gadel/rng.hpp"
#include "gadel/verify.hpp"

namespace gadel {

struct GAParams {
  std::size_t population_size = 325;
  double crossover_rate = 0.8;
  double mutation_rate = 0.1;
  std::size_t max_generations = 1000;
  std::uint64_t seed = 0;
  // Rank r of the distinct, sorted chromosomes gets weight max(rank_levels - r, 1).
  std::size_t rank_levels = 4;
  // Cut anywhere in 1..n-1 instead of only between two defaults' genes.
  bool any_cut_crossover = false;
  Representation representation = Representation::TwoBit;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Bits fixed to 1 by preprocessing, as a mask over the chromosome.
Chromosome forced_mask(const PreprocessedTheory& t, Representation rep = Representation::TwoBit);

/// Strict total order used by selection: penalty, then cardinality
/// ascending, then bitstring value descending.
bool ranks_before(const Chromosome& a, const Fitness& fa, const Chromosome& b, const Fitness& fb);

/// Copies per distinct chromosome, in rank order. Sums to `population_size`.
std::vector<std::size_t> apportion(std::span<const Fitness> ranked, std::size_t population_size,
                                   std::size_t rank_levels);

/// Rank-replication selection: deduplicate, sort, replicate by rank weight.
/// The result lists copies grouped in rank order.
std::vector<Chromosome> select(std::span<const Chromosome> population,
                               std::span<const Fitness> fitnesses, std::size_t population_size,
                               std::size_t rank_levels);

/// Swaps tails after the first `cut` positions (1 <= cut < length).
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               std::size_t cut);

/// With probability `rate` cut at a random position (a gene boundary unless
/// `any_position`) and swap tails; otherwise return the parents. The mask is
/// re-applied to both children.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, Rng& rng,
                                            double rate, bool any_position,
                                            const Chromosome& mask);

/// Flips each unforced bit independently with probability `rate`.
Chromosome mutate(const Chromosome& g, Rng& rng, double rate, const Chromosome& mask);

/// Memoizes candidate status per applied set for one theory.
class Evaluator {
 public:
  Evaluator(const PreprocessedTheory& t, Representation rep);

  const CandidateStatus& status(const Chromosome& g);
  Fitness evaluate(const Chromosome& g) { return fitness_from(g, status(g), rep_); }

  std::uint64_t queries() const { return queries_; }
  std::size_t distinct_candidates() const { return cache_.size(); }

 private:
  Chromosome applied_key(const Chromosome& g) const;

  const PreprocessedTheory& theory_;
  Representation rep_;
  std::unordered_map<Chromosome, CandidateStatus, ChromosomeHash> cache_;
  std::uint64_t queries_ = 0;
};

enum class Outcome { Found, Exhausted };

const char* to_string(Outcome o);

struct SearchReport {
  Outcome outcome = Outcome::Exhausted;
  std::optional<Chromosome> chromosome;       // set when Found
  std::optional<Verification> certificate;    // set when Found
  std::size_t generations_used = 0;           // evolution steps before the certifying population
  std::vector<Fitness> fitness_trace;         // best fitness of every evaluated population
  std::uint64_t entailment_queries = 0;
  std::uint64_t rejected_candidates = 0;      // penalty-0 chromosomes that failed certification
};

/// Generational search. Population 0 is random with forced bits applied; each
/// evaluated population is scanned for penalty-0 members, which are certified
/// before being accepted. Otherwise select, cross, mutate, up to
/// `max_generations` evolution steps. Fully determined by (theory, params).
SearchReport search(const PreprocessedTheory& t, const GAParams& params);

}  // namespace gadel
