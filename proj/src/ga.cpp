#include "gadel/ga.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace gadel {

void GAParams::validate() const {
  if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw std::invalid_argument("crossover probability must lie in [0, 1]");
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw std::invalid_argument("mutation probability must lie in [0, 1]");
  }
  if (rank_levels < 1) throw std::invalid_argument("rank levels must be at least 1");
}

Chromosome forced_mask(const PreprocessedTheory& t, Representation rep) {
  Chromosome mask(chromosome_length(t, rep));
  if (rep == Representation::OneBit) return mask;
  for (std::size_t i = 0; i < t.forced.size(); ++i) {
    if (t.forced[i].prereq) mask.set(2 * i, true);
    if (t.forced[i].justif) mask.set(2 * i + 1, true);
  }
  return mask;
}

bool ranks_before(const Chromosome& a, const Fitness& fa, const Chromosome& b, const Fitness& fb) {
  if (fa != fb) return fa < fb;
  return Chromosome::compare_value(a, b) > 0;
}

std::vector<std::size_t> apportion(std::span<const Fitness> ranked, std::size_t population_size,
                                   std::size_t rank_levels) {
  const std::size_t n = ranked.size();
  std::vector<std::size_t> copies(n, 0);
  if (n == 0) return copies;

  std::vector<std::uint64_t> weight(n);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < n; ++r) {
    weight[r] = r + 1 < rank_levels ? rank_levels - r : 1;
    total += weight[r];
  }

  // Largest-remainder scaling of the weights to exactly population_size seats.
  std::vector<std::uint64_t> remainder(n);
  std::size_t seated = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::uint64_t quota = weight[r] * population_size;
    copies[r] = static_cast<std::size_t>(quota / total);
    remainder[r] = quota % total;
    seated += copies[r];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; seated < population_size; ++k, ++seated) ++copies[order[k % n]];

  // The best chromosome must outnumber every strictly worse one; rounding can
  // erase that when weights are flat, so move seats from the tail.
  auto worse_max = [&] {
    std::size_t m = 0;
    for (std::size_t r = 1; r < n; ++r) {
      if (ranked[0] < ranked[r]) m = std::max(m, copies[r]);
    }
    return m;
  };
  while (copies[0] <= worse_max()) {
    std::size_t donor = n - 1;
    while (donor > 0 && copies[donor] == 0) --donor;
    if (donor == 0) break;
    --copies[donor];
    ++copies[0];
  }
  return copies;
}

std::vector<Chromosome> select(std::span<const Chromosome> population,
                               std::span<const Fitness> fitnesses, std::size_t population_size,
                               std::size_t rank_levels) {
  if (population.size() != fitnesses.size()) {
    throw std::invalid_argument("population and fitness sizes differ");
  }
  std::vector<std::size_t> distinct;
  std::unordered_set<Chromosome, ChromosomeHash> seen;
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (seen.insert(population[i]).second) distinct.push_back(i);
  }
  std::sort(distinct.begin(), distinct.end(), [&](std::size_t a, std::size_t b) {
    return ranks_before(population[a], fitnesses[a], population[b], fitnesses[b]);
  });
  std::vector<Fitness> ranked;
  ranked.reserve(distinct.size());
  for (std::size_t i : distinct) ranked.push_back(fitnesses[i]);

  const std::vector<std::size_t> copies = apportion(ranked, population_size, rank_levels);
  std::vector<Chromosome> out;
  out.reserve(population_size);
  for (std::size_t r = 0; r < distinct.size(); ++r) {
    out.insert(out.end(), copies[r], population[distinct[r]]);
  }
  return out;
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               std::size_t cut) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover of unequal lengths");
  if (cut == 0 || cut >= a.size()) throw std::invalid_argument("crossover cut out of range");
  Chromosome x = a;
  Chromosome y = b;
  for (std::size_t i = cut; i < a.size(); ++i) {
    x.set(i, b.bit(i));
    y.set(i, a.bit(i));
  }
  return {std::move(x), std::move(y)};
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a, const Chromosome& b, Rng& rng,
                                            double rate, bool any_position,
                                            const Chromosome& mask) {
  if (a.size() != b.size()) throw std::invalid_argument("crossover of unequal lengths");
  if (rng.uniform() >= rate) return {a, b};

  std::size_t cut;
  if (any_position) {
    if (a.size() < 2) return {a, b};
    cut = 1 + static_cast<std::size_t>(rng.below(a.size() - 1));
  } else {
    // Boundaries between two-bit genes: 2, 4, ..., size - 2.
    const std::size_t boundaries = a.size() / 2 > 0 ? a.size() / 2 - 1 : 0;
    if (boundaries == 0) return {a, b};
    cut = 2 * (1 + static_cast<std::size_t>(rng.below(boundaries)));
  }
  auto children = crossover_at(a, b, cut);
  children.first.force(mask);
  children.second.force(mask);
  return children;
}

Chromosome mutate(const Chromosome& g, Rng& rng, double rate, const Chromosome& mask) {
  Chromosome out = g;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (mask.bit(i)) continue;
    if (rng.uniform() < rate) out.flip(i);
  }
  return out;
}

Evaluator::Evaluator(const PreprocessedTheory& t, Representation rep) : theory_(t), rep_(rep) {}

Chromosome Evaluator::applied_key(const Chromosome& g) const {
  Chromosome key(theory_.encoded.size());
  for (std::size_t i = 0; i < theory_.encoded.size(); ++i) {
    key.set(i, rep_ == Representation::TwoBit ? g.applies(i) : g.bit(i));
  }
  return key;
}

const CandidateStatus& Evaluator::status(const Chromosome& g) {
  Chromosome key = applied_key(g);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const CandidateExtension ce = candidate_extension(interpret(g, theory_, rep_), theory_);
  CandidateStatus s = assess(ce, theory_);
  queries_ += s.queries;
  return cache_.emplace(std::move(key), std::move(s)).first->second;
}

const char* to_string(Outcome o) { return o == Outcome::Found ? "found" : "exhausted"; }

SearchReport search(const PreprocessedTheory& t, const GAParams& params) {
  params.validate();
  const Representation rep = params.representation;
  const std::size_t length = chromosome_length(t, rep);
  const Chromosome mask = forced_mask(t, rep);
  const bool any_cut = params.any_cut_crossover || rep == Representation::OneBit;
  Rng rng(params.seed);
  Evaluator evaluator(t, rep);
  SearchReport report;

  std::vector<Chromosome> population;
  population.reserve(params.population_size);
  for (std::size_t k = 0; k < params.population_size; ++k) {
    Chromosome c(length);
    for (std::size_t i = 0; i < length; ++i) c.set(i, rng.coin());
    c.force(mask);
    population.push_back(std::move(c));
  }

  std::unordered_set<Chromosome, ChromosomeHash> failed;  // applied sets that failed certification
  std::vector<Fitness> fitnesses(params.population_size);
  for (std::size_t gen = 0;; ++gen) {
    for (std::size_t i = 0; i < population.size(); ++i) {
      fitnesses[i] = evaluator.evaluate(population[i]);
    }
    report.fitness_trace.push_back(*std::min_element(fitnesses.begin(), fitnesses.end()));

    for (std::size_t i = 0; i < population.size(); ++i) {
      if (fitnesses[i].penalty != 0) continue;
      const CandidateGeneratingSet cgd = interpret(population[i], t, rep);
      Chromosome key(t.base.defaults.size());
      for (std::size_t id : cgd.ids) key.set(id, true);
      if (failed.contains(key)) continue;
      Verification v = verify_extension(population[i], t, evaluator.status(population[i]), rep);
      if (v.certified()) {
        report.outcome = Outcome::Found;
        report.chromosome = population[i];
        report.certificate = std::move(v);
        report.generations_used = gen;
        report.entailment_queries = evaluator.queries();
        return report;
      }
      failed.insert(std::move(key));
      ++report.rejected_candidates;
    }

    if (gen == params.max_generations) break;

    std::vector<Chromosome> next =
        select(population, fitnesses, params.population_size, params.rank_levels);
    for (std::size_t i = next.size(); i > 1; --i) {
      std::swap(next[i - 1], next[static_cast<std::size_t>(rng.below(i))]);
    }
    for (std::size_t i = 0; i + 1 < next.size(); i += 2) {
      auto [x, y] = crossover(next[i], next[i + 1], rng, params.crossover_rate, any_cut, mask);
      next[i] = std::move(x);
      next[i + 1] = std::move(y);
    }
    for (Chromosome& c : next) c = mutate(c, rng, params.mutation_rate, mask);
    population = std::move(next);
  }

  report.outcome = Outcome::Exhausted;
  report.generations_used = params.max_generations;
  report.entailment_queries = evaluator.queries();
  return report;
}

}  // namespace gadel
