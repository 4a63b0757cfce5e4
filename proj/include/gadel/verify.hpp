#pragma once

#include <string>
#include <vector>

#include "gadel/fitness.hpp"
#include "gadel/semantics.hpp"

namespace gadel {

enum class Verdict { Certified, PenaltyPositive, ConstraintViolated, NotGrounded };

const char* to_string(Verdict v);

struct Verification {
  Verdict verdict = Verdict::PenaltyPositive;
  CandidateGeneratingSet cgd;
  std::vector<Formula> generators;  // W ∪ conseq(CGD)
  Fitness fitness;
  std::uint32_t table_penalty = 0;
  std::vector<std::size_t> violated_constraints;
  GroundednessWitness witness;  // filled only when the first two checks pass

  bool certified() const { return verdict == Verdict::Certified; }
  std::string reason() const;
};

/// A chromosome is certified when its table penalty is zero, no constraint
/// default is violated, and its applied set is grounded. A certified
/// chromosome's generators span an extension whose generating default set is
/// exactly the applied set.
Verification verify_extension(const Chromosome& g, const PreprocessedTheory& t,
                              Representation rep = Representation::TwoBit);

/// Same check when the candidate status is already known.
Verification verify_extension(const Chromosome& g, const PreprocessedTheory& t,
                              const CandidateStatus& status,
                              Representation rep = Representation::TwoBit);

}  // namespace gadel
