#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "gadel/formula.hpp"
#include "gadel/theory.hpp"

namespace gadel {

/// Ground-truth extension enumeration by the pseudo-iterative fixpoint
/// characterization. Exponential in |D|; meant as a referee for small theories.
namespace oracle {

struct ExtensionRecord {
  std::vector<std::size_t> generating_ids;  // DG(W,D,E), ascending
  std::vector<Formula> generators;          // W ∪ conseq(DG)
};

/// True iff Th(W ∪ conseq(candidate)) is an extension whose generating
/// default set is exactly `candidate`. `candidate` need not be sorted.
bool check_extension(std::span<const std::size_t> candidate, const DefaultTheory& t);

class BoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultBound = 16;

/// All extensions, ordered by the bitmask of their generating set.
/// Throws BoundExceeded when |D| > bound.
std::vector<ExtensionRecord> all_extensions(const DefaultTheory& t,
                                            std::size_t bound = kDefaultBound);

/// Whether two generator sets span the same theory.
bool same_theory(std::span<const Formula> a, std::span<const Formula> b);

}  // namespace oracle
}  // namespace gadel
