#include "gadel/cnf.hpp"

#include <algorithm>

namespace gadel {

const Var* ClauseSet::find(AtomId atom) const {
  auto it = atom_var_.find(atom);
  return it == atom_var_.end() ? nullptr : &it->second;
}

Var CnfBuilder::var_for(AtomId atom) {
  auto [it, inserted] = set_.atom_var_.try_emplace(atom, static_cast<Var>(set_.var_atom_.size()));
  if (inserted) set_.var_atom_.push_back(atom);
  return it->second;
}

void CnfBuilder::add_clause(Clause c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].var() == c[i - 1].var()) return;  // tautology
  }
  if (c.empty()) set_.has_empty_ = true;
  set_.clauses_.push_back(std::move(c));
}

void CnfBuilder::flatten_conjuncts(const Formula& f, bool positive,
                                   std::vector<std::pair<Formula, bool>>& out) const {
  switch (f.connective()) {
    case Connective::Not:
      flatten_conjuncts(f.lhs(), !positive, out);
      return;
    case Connective::True:
    case Connective::False:
      // A satisfied conjunct contributes nothing.
      if ((f.connective() == Connective::True) == positive) return;
      out.emplace_back(f, positive);
      return;
    case Connective::And:
      if (positive) {
        flatten_conjuncts(f.lhs(), true, out);
        flatten_conjuncts(f.rhs(), true, out);
        return;
      }
      break;
    case Connective::Or:
      if (!positive) {
        flatten_conjuncts(f.lhs(), false, out);
        flatten_conjuncts(f.rhs(), false, out);
        return;
      }
      break;
    case Connective::Implies:
      if (!positive) {
        flatten_conjuncts(f.lhs(), true, out);
        flatten_conjuncts(f.rhs(), false, out);
        return;
      }
      break;
    case Connective::Atom:
      break;
  }
  out.emplace_back(f, positive);
}

bool CnfBuilder::collect_disjuncts(const Formula& f, bool positive, Clause& out) {
  switch (f.connective()) {
    case Connective::True:
    case Connective::False:
      return (f.connective() == Connective::True) != positive;
    case Connective::Atom:
      out.emplace_back(var_for(f.atom_id()), positive);
      return true;
    case Connective::Not:
      return collect_disjuncts(f.lhs(), !positive, out);
    case Connective::Or:
      if (positive) {
        return collect_disjuncts(f.lhs(), true, out) && collect_disjuncts(f.rhs(), true, out);
      }
      break;
    case Connective::And:
      if (!positive) {
        return collect_disjuncts(f.lhs(), false, out) && collect_disjuncts(f.rhs(), false, out);
      }
      break;
    case Connective::Implies:
      if (positive) {
        return collect_disjuncts(f.lhs(), false, out) && collect_disjuncts(f.rhs(), true, out);
      }
      break;
  }
  out.push_back(define(f, positive));
  return true;
}

Lit CnfBuilder::define(const Formula& f, bool positive) {
  const DefKey key{f.identity(), positive};
  if (auto it = definitions_.find(key); it != definitions_.end()) return it->second;

  const Lit x(static_cast<Var>(set_.var_atom_.size()), true);
  set_.var_atom_.push_back(kAuxiliary);
  defined_.push_back(f);
  definitions_.emplace(key, x);

  std::vector<std::pair<Formula, bool>> parts;
  flatten_conjuncts(f, positive, parts);
  for (const auto& [g, q] : parts) {
    Clause c{~x};
    if (collect_disjuncts(g, q, c)) add_clause(std::move(c));
  }
  return x;
}

void CnfBuilder::assert_formula(const Formula& f, bool positive) {
  std::vector<std::pair<Formula, bool>> parts;
  flatten_conjuncts(f, positive, parts);
  for (const auto& [g, q] : parts) {
    Clause c;
    if (collect_disjuncts(g, q, c)) add_clause(std::move(c));
  }
}

ClauseSet to_cnf(const Formula& f) {
  CnfBuilder b;
  b.add(f);
  return b.release();
}

ClauseSet to_cnf(std::span<const Formula> formulas) {
  CnfBuilder b;
  for (const Formula& f : formulas) b.add(f);
  return b.release();
}

}  // namespace gadel
