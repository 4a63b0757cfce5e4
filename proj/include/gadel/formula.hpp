#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gadel {

using AtomId = std::uint32_t;

/// Process-wide atom interning. Equal names map to one id; ids are dense and
/// stable for the lifetime of the process. Thread-safe.
class AtomTable {
 public:
  static AtomId intern(std::string_view name);
  static const std::string& name(AtomId id);
  static bool is_valid_name(std::string_view name);
};

enum class Connective : std::uint8_t { True, False, Atom, Not, And, Or, Implies };

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  Formula();  // true

  static Formula constant(bool value);
  static Formula atom(AtomId id);
  static Formula atom(std::string_view name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Connective connective() const { return node_->op; }
  bool is_constant() const {
    return node_->op == Connective::True || node_->op == Connective::False;
  }
  AtomId atom_id() const { return node_->atom; }
  // Operand of Not, left operand of binary connectives.
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  std::size_t hash() const { return node_->hash; }
  // Node identity; stable while any copy is alive.
  const void* identity() const { return node_.get(); }

  void collect_atoms(std::vector<AtomId>& out) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Connective op;
    AtomId atom = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash = 0;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Connective op, AtomId atom, std::shared_ptr<const Node> lhs,
                      std::shared_ptr<const Node> rhs);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Raised for malformed formula or theory text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar:
///   formula := impl ; impl := disj ("->" impl)? ; disj := conj ("|" conj)* ;
///   conj := unary ("&" unary)* ; unary := "~" unary | "(" formula ")" | "true" | "false" | IDENT
Formula parse_formula(std::string_view text);

/// Prints with the minimal parentheses needed for parse_formula to rebuild the
/// same tree.
std::string to_string(const Formula& f);

/// Removes every double negation ~~g -> g, at any depth.
Formula strip_double_negations(const Formula& f);

}  // namespace gadel
