#include "gadel/sat.hpp"

#include <algorithm>
#include <numeric>

namespace gadel {

DpllSolver::DpllSolver(const ClauseSet& cs)
    : watches_(2 * cs.num_vars()), assign_(cs.num_vars(), kUnassigned) {
  std::vector<std::uint32_t> occurrences(cs.num_vars(), 0);
  clauses_.reserve(cs.clauses().size());
  for (const Clause& c : cs.clauses()) {
    if (c.empty()) {
      trivially_unsat_ = true;
      continue;
    }
    for (Lit l : c) ++occurrences[l.var()];
    if (c.size() == 1) {
      units_.push_back(c.front());
      continue;
    }
    const auto idx = static_cast<std::uint32_t>(clauses_.size());
    clauses_.push_back(c);
    watches_[c[0].code()].push_back(idx);
    watches_[c[1].code()].push_back(idx);
  }
  order_.resize(cs.num_vars());
  std::iota(order_.begin(), order_.end(), Var{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](Var a, Var b) { return occurrences[a] > occurrences[b]; });
}

bool DpllSolver::enqueue(Lit l) {
  const std::int8_t v = value(l);
  if (v == kFalse) return false;
  if (v == kUnassigned) {
    assign_[l.var()] = l.positive() ? kTrue : kFalse;
    trail_.push_back(l);
  }
  return true;
}

bool DpllSolver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit false_lit = ~trail_[qhead_++];
    auto& ws = watches_[false_lit.code()];
    std::size_t keep = 0;
    bool conflict = false;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::uint32_t ci = ws[i];
      if (conflict) {
        ws[keep++] = ci;
        continue;
      }
      Clause& c = clauses_[ci];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == kTrue) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != kFalse) {
          std::swap(c[1], c[k]);
          watches_[c[1].code()].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (!enqueue(c[0])) conflict = true;
    }
    ws.resize(keep);
    if (conflict) return false;
  }
  return true;
}

void DpllSolver::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    assign_[trail_.back().var()] = kUnassigned;
    trail_.pop_back();
  }
  qhead_ = std::min(qhead_, trail_size);
}

std::optional<Model> DpllSolver::solve(std::span<const Lit> assumptions) {
  undo_to(0);
  if (trivially_unsat_) return std::nullopt;
  for (Lit u : units_) {
    if (!enqueue(u)) return std::nullopt;
  }
  for (Lit a : assumptions) {
    if (!enqueue(a)) return std::nullopt;
  }

  struct Decision {
    Lit lit;
    std::size_t trail_size;
    bool flipped;
  };
  std::vector<Decision> stack;
  std::size_t next_var = 0;

  while (true) {
    if (!propagate()) {
      while (!stack.empty() && stack.back().flipped) stack.pop_back();
      if (stack.empty()) return std::nullopt;
      Decision& d = stack.back();
      undo_to(d.trail_size);
      d.flipped = true;
      d.lit = ~d.lit;
      enqueue(d.lit);
      next_var = 0;
      continue;
    }
    while (next_var < order_.size() && assign_[order_[next_var]] != kUnassigned) ++next_var;
    if (next_var == order_.size()) break;
    ++decisions_;
    const Lit l(order_[next_var], false);
    stack.push_back({l, trail_.size(), false});
    enqueue(l);
  }

  Model m(assign_.size());
  for (std::size_t v = 0; v < assign_.size(); ++v) m[v] = assign_[v] == kTrue;
  return m;
}

bool is_satisfiable(const ClauseSet& cs) { return DpllSolver(cs).solve().has_value(); }

}  // namespace gadel
