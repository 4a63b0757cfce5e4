#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gadel/formula.hpp"

namespace gadel {

/// Solver variable index, dense from 0.
using Var = std::uint32_t;

/// Literal packed as 2*var + (negative ? 1 : 0).
class Lit {
 public:
  Lit() = default;
  Lit(Var v, bool positive) : code_(2 * v + (positive ? 0u : 1u)) {}

  Var var() const { return code_ >> 1; }
  bool positive() const { return (code_ & 1u) == 0; }
  std::uint32_t code() const { return code_; }
  Lit operator~() const {
    Lit l;
    l.code_ = code_ ^ 1u;
    return l;
  }
  friend bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend auto operator<=>(Lit a, Lit b) { return a.code_ <=> b.code_; }

 private:
  std::uint32_t code_ = 0;
};

using Clause = std::vector<Lit>;

inline constexpr AtomId kAuxiliary = std::numeric_limits<AtomId>::max();

/// Clause set over solver variables. Every variable is either bound to an atom
/// or is an auxiliary introduced by the structural transformation.
/// Tautological clauses never appear; literals within a clause are unique.
class ClauseSet {
 public:
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t num_vars() const { return var_atom_.size(); }
  AtomId atom_of(Var v) const { return var_atom_[v]; }
  /// Variable bound to `atom`, if the atom occurs.
  const Var* find(AtomId atom) const;
  bool has_empty_clause() const { return has_empty_; }

 private:
  friend class CnfBuilder;
  std::vector<Clause> clauses_;
  std::vector<AtomId> var_atom_;
  std::unordered_map<AtomId, Var> atom_var_;
  bool has_empty_ = false;
};

/// Incremental structural (Plaisted-Greenbaum style) CNF transformation.
/// Each added formula is asserted; nested conjunctive structure under a
/// disjunction gets a one-directional auxiliary definition. The result is
/// equisatisfiable with the conjunction of the added formulas.
class CnfBuilder {
 public:
  void add(const Formula& f) { assert_formula(f, true); }
  /// Asserts the negation of `f`.
  void add_negated(const Formula& f) { assert_formula(f, false); }
  void add_clause(Clause c);

  Var var_for(AtomId atom);
  const ClauseSet& clauses() const { return set_; }
  ClauseSet release() { return std::move(set_); }

 private:
  void assert_formula(const Formula& f, bool positive);
  void flatten_conjuncts(const Formula& f, bool positive,
                         std::vector<std::pair<Formula, bool>>& out) const;
  // Returns false when the disjunction is trivially satisfied.
  bool collect_disjuncts(const Formula& f, bool positive, Clause& out);
  Lit define(const Formula& f, bool positive);

  ClauseSet set_;
  struct DefKey {
    const void* node;
    bool positive;
    bool operator==(const DefKey&) const = default;
  };
  struct DefKeyHash {
    std::size_t operator()(const DefKey& k) const {
      return std::hash<const void*>()(k.node) ^ (k.positive ? 0x5bd1e995u : 0u);
    }
  };
  // Keeps the defined subformulas alive so node identities stay unique.
  std::vector<Formula> defined_;
  std::unordered_map<DefKey, Lit, DefKeyHash> definitions_;
};

ClauseSet to_cnf(const Formula& f);
ClauseSet to_cnf(std::span<const Formula> formulas);

}  // namespace gadel
