#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gadel/chromosome.hpp"
#include "gadel/prover.hpp"
#include "gadel/theory.hpp"

namespace gadel {

/// How a chromosome maps to applied defaults.
///   TwoBit: 2 bits per encoded default, applied iff the pair reads (1,0).
///   OneBit: 1 bit per encoded default, applied iff set. Kept for experiments.
enum class Representation { TwoBit, OneBit };

std::size_t chromosome_length(const PreprocessedTheory& t, Representation rep = Representation::TwoBit);

/// Defaults a chromosome takes as applied, by id in the base theory (ascending).
struct CandidateGeneratingSet {
  std::vector<std::size_t> ids;

  bool operator==(const CandidateGeneratingSet&) const = default;
};

/// Throws std::invalid_argument when the length does not match the theory.
CandidateGeneratingSet interpret(const Chromosome& g, const PreprocessedTheory& t,
                                 Representation rep = Representation::TwoBit);

/// Th(W ∪ consequents) held intensionally by its generators; membership is an
/// entailment query and the closure is never built.
class CandidateExtension {
 public:
  explicit CandidateExtension(std::vector<Formula> generators);

  const std::vector<Formula>& generators() const { return generators_; }
  bool entails(const Formula& f) const { return kb_.entails(f); }
  bool consistent() const { return kb_.consistent(); }
  std::uint64_t queries() const { return kb_.queries(); }

 private:
  std::vector<Formula> generators_;
  mutable KnowledgeBase kb_;
};

/// W followed by the consequents of `ids`, in the given order.
std::vector<Formula> generators_of(const DefaultTheory& t, std::span<const std::size_t> ids);

CandidateExtension candidate_extension(const CandidateGeneratingSet& cgd, const DefaultTheory& t);
inline CandidateExtension candidate_extension(const CandidateGeneratingSet& cgd,
                                              const PreprocessedTheory& t) {
  return candidate_extension(cgd, t.base);
}

struct GroundednessWitness {
  bool grounded = false;
  std::vector<std::size_t> ordering;  // ids in application order
  std::vector<std::size_t> residue;   // ids never reached; empty on success
};

/// Greedy saturation from W. `scan_order`, when given, is a permutation of
/// `ids` fixing which applicable default is picked first; the verdict does not
/// depend on it.
GroundednessWitness is_grounded(std::span<const std::size_t> ids, const DefaultTheory& t,
                                std::span<const std::size_t> scan_order = {});

inline GroundednessWitness is_grounded(const CandidateGeneratingSet& cgd, const DefaultTheory& t) {
  return is_grounded(cgd.ids, t);
}

}  // namespace gadel
