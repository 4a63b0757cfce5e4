#include "gadel/formula.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "lexer.hpp"

namespace gadel {

namespace {

struct AtomRegistry {
  std::shared_mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string_view, AtomId> ids;
};

AtomRegistry& registry() {
  static AtomRegistry r;
  return r;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

AtomId AtomTable::intern(std::string_view name) {
  AtomRegistry& r = registry();
  {
    std::shared_lock lock(r.mutex);
    if (auto it = r.ids.find(name); it != r.ids.end()) return it->second;
  }
  std::unique_lock lock(r.mutex);
  if (auto it = r.ids.find(name); it != r.ids.end()) return it->second;
  const auto id = static_cast<AtomId>(r.names.size());
  r.names.emplace_back(name);
  r.ids.emplace(r.names.back(), id);
  return id;
}

const std::string& AtomTable::name(AtomId id) {
  AtomRegistry& r = registry();
  std::shared_lock lock(r.mutex);
  return r.names.at(id);
}

bool AtomTable::is_valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "true" && name != "false";
}

Formula Formula::make(Connective op, AtomId atom, std::shared_ptr<const Node> lhs,
                      std::shared_ptr<const Node> rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->atom = atom;
  std::size_t h = mix(static_cast<std::size_t>(op) * 0x100000001b3ULL, atom);
  if (lhs) h = mix(h, lhs->hash);
  if (rhs) h = mix(h, rhs->hash);
  n->hash = h;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula::Formula() : Formula(constant(true)) {}

Formula Formula::constant(bool value) {
  static const Formula t = make(Connective::True, 0, nullptr, nullptr);
  static const Formula f = make(Connective::False, 0, nullptr, nullptr);
  return value ? t : f;
}

Formula Formula::atom(AtomId id) { return make(Connective::Atom, id, nullptr, nullptr); }

Formula Formula::atom(std::string_view name) {
  if (!AtomTable::is_valid_name(name)) {
    throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
  }
  return atom(AtomTable::intern(name));
}

Formula Formula::negation(Formula f) {
  return make(Connective::Not, 0, std::move(f.node_), nullptr);
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Connective::And, 0, std::move(lhs.node_), std::move(rhs.node_));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Connective::Or, 0, std::move(lhs.node_), std::move(rhs.node_));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Connective::Implies, 0, std::move(lhs.node_), std::move(rhs.node_));
}

void Formula::collect_atoms(std::vector<AtomId>& out) const {
  switch (connective()) {
    case Connective::True:
    case Connective::False:
      return;
    case Connective::Atom:
      out.push_back(atom_id());
      return;
    case Connective::Not:
      lhs().collect_atoms(out);
      return;
    default:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
  }
}

bool operator==(const Formula& a, const Formula& b) {
  const Formula::Node* x = a.node_.get();
  const Formula::Node* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->op != y->op || x->atom != y->atom) return false;
  if (x->lhs && !(Formula(x->lhs) == Formula(y->lhs))) return false;
  if (x->rhs && !(Formula(x->rhs) == Formula(y->rhs))) return false;
  return true;
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Formula parse_formula(std::string_view text) {
  detail::Lexer lex(text, false);
  Formula f = detail::FormulaParser(lex).parse();
  detail::expect(lex, detail::Tok::End);
  return f;
}

namespace {

int precedence(Connective c) {
  switch (c) {
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not: return 4;
    default: return 5;
  }
}

void print(const Formula& f, int min_prec, std::string& out) {
  const Connective c = f.connective();
  const bool parens = precedence(c) < min_prec;
  if (parens) out += '(';
  switch (c) {
    case Connective::True: out += "true"; break;
    case Connective::False: out += "false"; break;
    case Connective::Atom: out += AtomTable::name(f.atom_id()); break;
    case Connective::Not:
      out += '~';
      print(f.lhs(), 4, out);
      break;
    case Connective::And:
      print(f.lhs(), 3, out);
      out += " & ";
      print(f.rhs(), 4, out);
      break;
    case Connective::Or:
      print(f.lhs(), 2, out);
      out += " | ";
      print(f.rhs(), 3, out);
      break;
    case Connective::Implies:
      print(f.lhs(), 2, out);
      out += " -> ";
      print(f.rhs(), 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

Formula strip_double_negations(const Formula& f) {
  switch (f.connective()) {
    case Connective::Not: {
      Formula inner = f.lhs();
      if (inner.connective() == Connective::Not) return strip_double_negations(inner.lhs());
      return Formula::negation(strip_double_negations(inner));
    }
    case Connective::And:
      return Formula::conjunction(strip_double_negations(f.lhs()), strip_double_negations(f.rhs()));
    case Connective::Or:
      return Formula::disjunction(strip_double_negations(f.lhs()), strip_double_negations(f.rhs()));
    case Connective::Implies:
      return Formula::implication(strip_double_negations(f.lhs()), strip_double_negations(f.rhs()));
    default:
      return f;
  }
}

}  // namespace gadel
