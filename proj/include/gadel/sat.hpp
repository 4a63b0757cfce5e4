#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gadel/cnf.hpp"

namespace gadel {

/// Assignment indexed by solver variable.
using Model = std::vector<bool>;

/// Complete DPLL search: two-watched-literal unit propagation, static
/// occurrence-count branching order, chronological backtracking.
/// The clause database is fixed at construction; solve() may be called
/// repeatedly under different assumptions. Not thread-safe.
class DpllSolver {
 public:
  explicit DpllSolver(const ClauseSet& cs);

  /// A satisfying assignment extending `assumptions`, or nullopt when none
  /// exists.
  std::optional<Model> solve(std::span<const Lit> assumptions = {});

  std::uint64_t decisions() const { return decisions_; }

 private:
  static constexpr std::int8_t kUnassigned = -1;
  static constexpr std::int8_t kFalse = 0;
  static constexpr std::int8_t kTrue = 1;

  std::int8_t value(Lit l) const {
    const std::int8_t v = assign_[l.var()];
    return v == kUnassigned ? kUnassigned : static_cast<std::int8_t>(v ^ (l.positive() ? 0 : 1));
  }
  bool enqueue(Lit l);
  bool propagate();
  void undo_to(std::size_t trail_size);

  std::vector<Clause> clauses_;
  std::vector<std::vector<std::uint32_t>> watches_;  // by literal code
  std::vector<Lit> units_;
  std::vector<std::int8_t> assign_;
  std::vector<Lit> trail_;
  std::size_t qhead_ = 0;
  std::vector<Var> order_;
  bool trivially_unsat_ = false;
  std::uint64_t decisions_ = 0;
};

bool is_satisfiable(const ClauseSet& cs);

}  // namespace gadel
