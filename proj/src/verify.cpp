#include "gadel/verify.hpp"

namespace gadel {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::PenaltyPositive: return "penalty-positive";
    case Verdict::ConstraintViolated: return "constraint-violated";
    case Verdict::NotGrounded: return "not-grounded";
  }
  return "?";
}

std::string Verification::reason() const {
  switch (verdict) {
    case Verdict::Certified:
      return "certified";
    case Verdict::PenaltyPositive:
      return "evaluation penalty " + std::to_string(table_penalty) + " > 0";
    case Verdict::ConstraintViolated: {
      std::string s = "constraint default violated:";
      for (std::size_t id : violated_constraints) s += " " + std::to_string(id);
      return s;
    }
    case Verdict::NotGrounded: {
      std::string s = "applied set not grounded, unreached:";
      for (std::size_t id : witness.residue) s += " " + std::to_string(id);
      return s;
    }
  }
  return {};
}

Verification verify_extension(const Chromosome& g, const PreprocessedTheory& t,
                              const CandidateStatus& status, Representation rep) {
  Verification v;
  v.cgd = interpret(g, t, rep);
  v.generators = generators_of(t.base, v.cgd.ids);
  v.fitness = fitness_from(g, status, rep);
  v.table_penalty = table_penalty(g, status, rep);
  v.violated_constraints = status.violated_constraints;
  if (v.table_penalty > 0) {
    v.verdict = Verdict::PenaltyPositive;
    return v;
  }
  if (!v.violated_constraints.empty()) {
    v.verdict = Verdict::ConstraintViolated;
    return v;
  }
  v.witness = is_grounded(v.cgd, t.base);
  v.verdict = v.witness.grounded ? Verdict::Certified : Verdict::NotGrounded;
  return v;
}

Verification verify_extension(const Chromosome& g, const PreprocessedTheory& t,
                              Representation rep) {
  const CandidateGeneratingSet cgd = interpret(g, t, rep);
  const CandidateExtension ce = candidate_extension(cgd, t);
  return verify_extension(g, t, assess(ce, t), rep);
}

}  // namespace gadel
