#pragma once

// Exhaustive certification over every chromosome of a small theory.

#include <cstdint>
#include <set>
#include <vector>

#include "gadel/fitness.hpp"
#include "gadel/semantics.hpp"
#include "gadel/theory.hpp"
#include "gadel/verify.hpp"

namespace gadel::testing {

using IdSet = std::vector<std::size_t>;

/// Applied sets of all certified chromosomes. Every bitstring of length
/// 2|encoded| is tried, forced bits included or not. Candidate status is
/// computed once per applied set.
inline std::set<IdSet> certified_sets(const PreprocessedTheory& t) {
  const std::size_t n = t.encoded.size();
  std::vector<CandidateStatus> status(std::size_t{1} << n);
  for (std::uint64_t applied = 0; applied < status.size(); ++applied) {
    CandidateGeneratingSet cgd;
    for (std::size_t i = 0; i < n; ++i) {
      if ((applied >> i) & 1u) cgd.ids.push_back(t.encoded[i]);
    }
    status[applied] = assess(candidate_extension(cgd, t), t);
  }
  std::set<IdSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * n)); ++bits) {
    Chromosome g(2 * n);
    std::uint64_t applied = 0;
    for (std::size_t p = 0; p < 2 * n; ++p) g.set(p, (bits >> p) & 1u);
    for (std::size_t i = 0; i < n; ++i) {
      if (g.applies(i)) applied |= std::uint64_t{1} << i;
    }
    const Verification v = verify_extension(g, t, status[applied]);
    if (v.certified()) out.insert(v.cgd.ids);
  }
  return out;
}

}  // namespace gadel::testing
