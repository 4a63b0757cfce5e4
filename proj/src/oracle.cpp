#include "gadel/oracle.hpp"

#include <algorithm>
#include <string>

#include "gadel/prover.hpp"
#include "gadel/semantics.hpp"

namespace gadel::oracle {

namespace {

bool entails_all(KnowledgeBase& kb, std::span<const Formula> goals) {
  return std::all_of(goals.begin(), goals.end(), [&](const Formula& g) { return kb.entails(g); });
}

}  // namespace

bool same_theory(std::span<const Formula> a, std::span<const Formula> b) {
  KnowledgeBase ka(a);
  KnowledgeBase kb(b);
  return entails_all(ka, b) && entails_all(kb, a);
}

bool check_extension(std::span<const std::size_t> candidate, const DefaultTheory& t) {
  std::vector<std::size_t> wanted(candidate.begin(), candidate.end());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  const std::vector<Formula> e_gen = generators_of(t, wanted);
  KnowledgeBase e(e_gen);

  // Justification blocking is judged against the candidate E throughout.
  std::vector<bool> blocked(t.defaults.size(), false);
  for (const Default& d : t.defaults) {
    for (const Formula& j : d.justifs) {
      if (e.entails(Formula::negation(j))) {
        blocked[d.id] = true;
        break;
      }
    }
  }

  // E_0 = W; E_{k+1} adds the consequents of unblocked defaults whose
  // prerequisite E_k proves. Applied sets grow monotonically, so the chain
  // stabilizes within |D| + 1 rounds.
  std::vector<std::size_t> applied;
  for (std::size_t round = 0; round <= t.defaults.size(); ++round) {
    KnowledgeBase stage(generators_of(t, applied));
    std::vector<std::size_t> next;
    for (const Default& d : t.defaults) {
      if (!blocked[d.id] && stage.entails(d.prereq)) next.push_back(d.id);
    }
    if (next == applied) break;
    applied = std::move(next);
  }

  if (applied != wanted) return false;
  return same_theory(generators_of(t, applied), e_gen);
}

std::vector<ExtensionRecord> all_extensions(const DefaultTheory& t, std::size_t bound) {
  const std::size_t n = t.defaults.size();
  if (n > bound || n >= 63) {
    throw BoundExceeded("theory has " + std::to_string(n) + " defaults, oracle bound is " +
                        std::to_string(bound));
  }
  std::vector<ExtensionRecord> out;
  std::vector<std::size_t> ids;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ids.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) ids.push_back(i);
    }
    if (!check_extension(ids, t)) continue;
    std::vector<Formula> gens = generators_of(t, ids);
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const ExtensionRecord& r) {
      return same_theory(r.generators, gens);
    });
    if (!duplicate) out.push_back({ids, std::move(gens)});
  }
  return out;
}

}  // namespace gadel::oracle
