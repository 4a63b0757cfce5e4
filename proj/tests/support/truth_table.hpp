#pragma once

// Test-only brute-force semantics. Shares nothing with the CNF/DPLL path
// except the formula AST accessors.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "gadel/formula.hpp"

namespace gadel::testing {

class TruthTable {
 public:
  explicit TruthTable(std::span<const Formula> formulas) {
    for (const Formula& f : formulas) f.collect_atoms(atoms_);
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }

  std::size_t atom_count() const { return atoms_.size(); }

  bool eval(const Formula& f, std::uint64_t row) const {
    switch (f.connective()) {
      case Connective::True: return true;
      case Connective::False: return false;
      case Connective::Atom: {
        const auto it = std::lower_bound(atoms_.begin(), atoms_.end(), f.atom_id());
        if (it == atoms_.end() || *it != f.atom_id()) return false;
        return (row >> (it - atoms_.begin())) & 1u;
      }
      case Connective::Not: return !eval(f.lhs(), row);
      case Connective::And: return eval(f.lhs(), row) && eval(f.rhs(), row);
      case Connective::Or: return eval(f.lhs(), row) || eval(f.rhs(), row);
      case Connective::Implies: return !eval(f.lhs(), row) || eval(f.rhs(), row);
    }
    return false;
  }

  std::uint64_t rows() const { return std::uint64_t{1} << atoms_.size(); }

 private:
  std::vector<AtomId> atoms_;
};

/// Every model of `base` satisfies `goal`, by enumeration.
inline bool tt_entails(std::span<const Formula> base, const Formula& goal) {
  std::vector<Formula> all(base.begin(), base.end());
  all.push_back(goal);
  const TruthTable tt(all);
  for (std::uint64_t r = 0; r < tt.rows(); ++r) {
    const bool model = std::all_of(base.begin(), base.end(),
                                   [&](const Formula& f) { return tt.eval(f, r); });
    if (model && !tt.eval(goal, r)) return false;
  }
  return true;
}

inline bool tt_satisfiable(std::span<const Formula> base) {
  return !tt_entails(base, Formula::constant(false));
}

}  // namespace gadel::testing
