#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gadel/cnf.hpp"
#include "gadel/formula.hpp"
#include "gadel/sat.hpp"

namespace gadel {

/// A finite formula set compiled once and queried many times.
///
/// Queries are answered exactly (base ∪ {¬goal} unsatisfiable). A goal with a
/// small clausal form is checked clause by clause as solver assumptions
/// against one persistent solver; larger goals get their negation compiled
/// next to a copy of the base. Two caches sit in front of the solver and never
/// change answers: a per-goal memo, and the models found by earlier
/// satisfiable queries, any of which refutes a goal it falsifies.
/// Not internally synchronized; use one instance per thread.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::span<const Formula> base);

  bool consistent();
  bool entails(const Formula& goal);

  /// Number of entails() calls answered, including cache hits.
  std::uint64_t queries() const { return queries_; }
  /// Number of calls that reached the solver.
  std::uint64_t solver_calls() const { return solver_calls_; }

 private:
  bool falsified_by_cached_model(const Formula& goal) const;
  bool entails_by_solver(const Formula& goal);
  DpllSolver& solver();
  bool eval_in(const Model& m, const Formula& f) const;
  void remember(const Model& m);

  CnfBuilder cnf_;
  std::optional<DpllSolver> solver_;
  std::optional<bool> consistent_;
  // Models restricted to the base's variables.
  std::vector<Model> models_;
  std::unordered_map<Formula, bool, FormulaHash> memo_;
  std::uint64_t queries_ = 0;
  std::uint64_t solver_calls_ = 0;
};

bool entails(std::span<const Formula> base, const Formula& goal);
bool is_consistent(std::span<const Formula> base);

}  // namespace gadel
