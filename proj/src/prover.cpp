#include "gadel/prover.hpp"

#include <algorithm>

namespace gadel {

namespace {

constexpr std::size_t kMaxCachedModels = 64;
constexpr std::size_t kMaxGoalClauses = 32;

struct GoalLit {
  AtomId atom;
  bool positive;
  auto operator<=>(const GoalLit&) const = default;
};
using GoalClause = std::vector<GoalLit>;

// Clausal form of (f, positive) by distribution, without auxiliaries.
// Tautological clauses are dropped. nullopt once the form grows past the limit.
std::optional<std::vector<GoalClause>> distribute(const Formula& f, bool positive) {
  switch (f.connective()) {
    case Connective::True:
    case Connective::False:
      if ((f.connective() == Connective::True) == positive) return std::vector<GoalClause>{};
      return std::vector<GoalClause>{GoalClause{}};
    case Connective::Atom:
      return std::vector<GoalClause>{GoalClause{{f.atom_id(), positive}}};
    case Connective::Not:
      return distribute(f.lhs(), !positive);
    default:
      break;
  }
  const Connective c = f.connective();
  const bool lhs_pos = c == Connective::Implies ? !positive : positive;
  auto a = distribute(f.lhs(), lhs_pos);
  if (!a) return std::nullopt;
  auto b = distribute(f.rhs(), positive);
  if (!b) return std::nullopt;
  const bool conjunctive = (c == Connective::And) == positive;
  if (conjunctive) {
    a->insert(a->end(), b->begin(), b->end());
    if (a->size() > kMaxGoalClauses) return std::nullopt;
    return a;
  }
  std::vector<GoalClause> out;
  for (const GoalClause& x : *a) {
    for (const GoalClause& y : *b) {
      GoalClause z = x;
      z.insert(z.end(), y.begin(), y.end());
      std::sort(z.begin(), z.end());
      z.erase(std::unique(z.begin(), z.end()), z.end());
      bool tautology = false;
      for (std::size_t i = 1; i < z.size(); ++i) tautology |= z[i].atom == z[i - 1].atom;
      if (tautology) continue;
      out.push_back(std::move(z));
      if (out.size() > kMaxGoalClauses) return std::nullopt;
    }
  }
  return out;
}

}  // namespace

KnowledgeBase::KnowledgeBase(std::span<const Formula> base) {
  for (const Formula& f : base) cnf_.add(f);
}

void KnowledgeBase::remember(const Model& m) {
  if (models_.size() >= kMaxCachedModels) return;
  const std::size_t n = cnf_.clauses().num_vars();
  models_.emplace_back(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n));
}

DpllSolver& KnowledgeBase::solver() {
  if (!solver_) solver_.emplace(cnf_.clauses());
  return *solver_;
}

bool KnowledgeBase::consistent() {
  if (!consistent_) {
    ++solver_calls_;
    auto m = solver().solve();
    consistent_ = m.has_value();
    if (m) remember(*m);
  }
  return *consistent_;
}

// Atoms foreign to the base are unconstrained; reading them as false still
// yields a genuine model of the base.
bool KnowledgeBase::eval_in(const Model& m, const Formula& f) const {
  switch (f.connective()) {
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Atom: {
      const Var* v = cnf_.clauses().find(f.atom_id());
      return v != nullptr && m[*v];
    }
    case Connective::Not: return !eval_in(m, f.lhs());
    case Connective::And: return eval_in(m, f.lhs()) && eval_in(m, f.rhs());
    case Connective::Or: return eval_in(m, f.lhs()) || eval_in(m, f.rhs());
    case Connective::Implies: return !eval_in(m, f.lhs()) || eval_in(m, f.rhs());
  }
  return false;
}

bool KnowledgeBase::falsified_by_cached_model(const Formula& goal) const {
  for (const Model& m : models_) {
    if (!eval_in(m, goal)) return true;
  }
  return false;
}

bool KnowledgeBase::entails(const Formula& goal) {
  ++queries_;
  if (!consistent()) return true;
  if (auto it = memo_.find(goal); it != memo_.end()) return it->second;

  const bool result = !falsified_by_cached_model(goal) && entails_by_solver(goal);
  memo_.emplace(goal, result);
  return result;
}

bool KnowledgeBase::entails_by_solver(const Formula& goal) {
  if (auto clauses = distribute(goal, true)) {
    // base ⊢ C1 ∧ … ∧ Ck iff for each Ci, base ∪ ¬Ci is unsatisfiable.
    std::vector<Lit> assumptions;
    for (const GoalClause& c : *clauses) {
      assumptions.clear();
      for (const GoalLit& l : c) {
        // Atoms foreign to the base are free; their assumption always holds.
        if (const Var* v = cnf_.clauses().find(l.atom)) assumptions.emplace_back(*v, !l.positive);
      }
      ++solver_calls_;
      if (auto m = solver().solve(assumptions)) {
        remember(*m);
        return false;
      }
    }
    return true;
  }
  CnfBuilder query = cnf_;
  query.add_negated(goal);
  ++solver_calls_;
  auto m = DpllSolver(query.clauses()).solve();
  if (m) remember(*m);
  return !m.has_value();
}

bool entails(std::span<const Formula> base, const Formula& goal) {
  return KnowledgeBase(base).entails(goal);
}

bool is_consistent(std::span<const Formula> base) { return KnowledgeBase(base).consistent(); }

}  // namespace gadel
