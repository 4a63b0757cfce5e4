#include "gadel/fitness.hpp"

namespace gadel {

CandidateStatus assess(const CandidateExtension& ce, const PreprocessedTheory& t) {
  CandidateStatus s;
  const std::uint64_t before = ce.queries();
  s.encoded.reserve(t.encoded.size());
  for (std::size_t i = 0; i < t.encoded.size(); ++i) {
    const Default& d = t.encoded_default(i);
    DefaultStatus ds;
    ds.prereq_entailed = ce.entails(d.prereq);
    for (const Formula& j : d.justifs) {
      if (ce.entails(Formula::negation(j))) {
        ds.justif_refuted = true;
        break;
      }
    }
    s.encoded.push_back(ds);
  }
  for (std::size_t id : t.constraints) {
    const Default& d = t.base.defaults[id];
    if (ce.entails(d.prereq) && !ce.entails(Formula::negation(d.justifs.front()))) {
      s.violated_constraints.push_back(id);
    }
  }
  s.queries = ce.queries() - before;
  return s;
}

int table_row(bool prereq_bit, bool justif_bit, const DefaultStatus& s) {
  int block;
  if (prereq_bit) {
    block = justif_bit ? 4 : 0;
  } else {
    block = justif_bit ? 8 : 12;
  }
  int offset;
  if (s.prereq_entailed) {
    offset = s.justif_refuted ? 2 : 1;
  } else {
    offset = s.justif_refuted ? 3 : 4;
  }
  return block + offset;
}

bool row_penalized(int row) {
  switch (row) {
    case 2: case 3: case 4:   // applied but should not be
    case 5: case 9: case 13:  // applicable but not applied
      return true;
    default:
      return false;
  }
}

int row_of(const Chromosome& g, std::size_t i, const PreprocessedTheory& t) {
  const CandidateExtension ce = candidate_extension(interpret(g, t), t);
  const CandidateStatus s = assess(ce, t);
  return table_row(g.prereq_bit(i), g.justif_bit(i), s.encoded.at(i));
}

std::uint32_t table_penalty(const Chromosome& g, const CandidateStatus& s, Representation rep) {
  std::uint32_t p = 0;
  for (std::size_t i = 0; i < s.encoded.size(); ++i) {
    const DefaultStatus& ds = s.encoded[i];
    if (rep == Representation::TwoBit) {
      if (row_penalized(table_row(g.prereq_bit(i), g.justif_bit(i), ds))) ++p;
    } else {
      const bool applicable = ds.prereq_entailed && !ds.justif_refuted;
      if (g.bit(i) != applicable) ++p;
    }
  }
  return p;
}

Fitness fitness_from(const Chromosome& g, const CandidateStatus& s, Representation rep) {
  Fitness f;
  f.penalty = table_penalty(g, s, rep) + static_cast<std::uint32_t>(s.violated_constraints.size());
  for (std::size_t i = 0; i < s.encoded.size(); ++i) {
    const bool on = rep == Representation::TwoBit ? g.applies(i) : g.bit(i);
    if (on) ++f.cardinality;
  }
  return f;
}

Fitness evaluate(const Chromosome& g, const PreprocessedTheory& t, Representation rep) {
  const CandidateExtension ce = candidate_extension(interpret(g, t, rep), t);
  return fitness_from(g, assess(ce, t), rep);
}

}  // namespace gadel
