#include "gadel/semantics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gadel {

std::size_t chromosome_length(const PreprocessedTheory& t, Representation rep) {
  return rep == Representation::TwoBit ? 2 * t.encoded.size() : t.encoded.size();
}

CandidateGeneratingSet interpret(const Chromosome& g, const PreprocessedTheory& t,
                                 Representation rep) {
  const std::size_t expected = chromosome_length(t, rep);
  if (g.size() != expected) {
    throw std::invalid_argument("chromosome has " + std::to_string(g.size()) +
                                " bits, theory needs " + std::to_string(expected));
  }
  CandidateGeneratingSet cgd;
  for (std::size_t i = 0; i < t.encoded.size(); ++i) {
    const bool on = rep == Representation::TwoBit ? g.applies(i) : g.bit(i);
    if (on) cgd.ids.push_back(t.encoded[i]);
  }
  return cgd;
}

CandidateExtension::CandidateExtension(std::vector<Formula> generators)
    : generators_(std::move(generators)), kb_(generators_) {}

std::vector<Formula> generators_of(const DefaultTheory& t, std::span<const std::size_t> ids) {
  std::vector<Formula> g = t.facts;
  g.reserve(t.facts.size() + ids.size());
  for (std::size_t id : ids) g.push_back(t.defaults.at(id).conseq);
  return g;
}

CandidateExtension candidate_extension(const CandidateGeneratingSet& cgd, const DefaultTheory& t) {
  return CandidateExtension(generators_of(t, cgd.ids));
}

GroundednessWitness is_grounded(std::span<const std::size_t> ids, const DefaultTheory& t,
                                std::span<const std::size_t> scan_order) {
  std::vector<std::size_t> pending(scan_order.empty() ? ids.begin() : scan_order.begin(),
                                   scan_order.empty() ? ids.end() : scan_order.end());
  GroundednessWitness w;
  while (!pending.empty()) {
    KnowledgeBase reached(generators_of(t, w.ordering));
    auto it = std::find_if(pending.begin(), pending.end(), [&](std::size_t id) {
      return reached.entails(t.defaults.at(id).prereq);
    });
    if (it == pending.end()) break;
    w.ordering.push_back(*it);
    pending.erase(it);
  }
  w.grounded = pending.empty();
  w.residue = std::move(pending);
  std::sort(w.residue.begin(), w.residue.end());
  return w;
}

}  // namespace gadel
