#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gadel/chromosome.hpp"
#include "gadel/semantics.hpp"

namespace gadel {

/// Lexicographic pair (penalty, |CGD|); smaller is better.
struct Fitness {
  std::uint32_t penalty = 0;
  std::uint32_t cardinality = 0;

  auto operator<=>(const Fitness&) const = default;
};

/// What a candidate extension says about one encoded default.
struct DefaultStatus {
  bool prereq_entailed = false;  // CE ⊢ α
  bool justif_refuted = false;   // ∃j. CE ⊢ ¬β_j

  bool operator==(const DefaultStatus&) const = default;
};

/// Everything the fitness needs from one candidate extension. It depends on
/// the applied set only, so it can be shared by every chromosome with the
/// same CGD.
struct CandidateStatus {
  std::vector<DefaultStatus> encoded;            // parallel to PreprocessedTheory::encoded
  std::vector<std::size_t> violated_constraints;  // ids with CE ⊢ α and CE ⊬ ¬β
  std::uint64_t queries = 0;
};

CandidateStatus assess(const CandidateExtension& ce, const PreprocessedTheory& t);

/// Evaluation table rows 1..16: bit pair (1,0),(1,1),(0,1),(0,0) in blocks of
/// four, and within a block (⊢α,⊢¬β) = (T,F),(T,T),(F,T),(F,F).
int table_row(bool prereq_bit, bool justif_bit, const DefaultStatus& s);
bool row_penalized(int row);

/// Row for encoded default `i` of `g`.
int row_of(const Chromosome& g, std::size_t i, const PreprocessedTheory& t);

/// Per-default penalty count from the table (constraint violations excluded).
std::uint32_t table_penalty(const Chromosome& g, const CandidateStatus& s,
                            Representation rep = Representation::TwoBit);

/// Table penalty plus one per violated constraint default, and |CGD|.
Fitness fitness_from(const Chromosome& g, const CandidateStatus& s,
                     Representation rep = Representation::TwoBit);

Fitness evaluate(const Chromosome& g, const PreprocessedTheory& t,
                 Representation rep = Representation::TwoBit);

}  // namespace gadel
