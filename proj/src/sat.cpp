#include "hoprep/sat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hoprep {

namespace {

enum class Val : char { Unset, True, False };

struct Solver {
  const SatProblem& p;
  std::vector<Val> assign;  // 1-based

  explicit Solver(const SatProblem& prob)
      : p(prob), assign(static_cast<size_t>(prob.nvars) + 1, Val::Unset) {}

  bool lit_true(int lit) const {
    Val v = assign[static_cast<size_t>(std::abs(lit))];
    if (v == Val::Unset) return false;
    return (v == Val::True) == (lit > 0);
  }
  bool lit_false(int lit) const {
    Val v = assign[static_cast<size_t>(std::abs(lit))];
    if (v == Val::Unset) return false;
    return (v == Val::True) != (lit > 0);
  }

  // Returns false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      // Unit propagation.
      for (auto& c : p.clauses) {
        int unassigned = 0, unit = 0;
        bool sat = false;
        for (int lit : c) {
          if (lit_true(lit)) {
            sat = true;
            break;
          }
          if (!lit_false(lit)) {
            ++unassigned;
            unit = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign[static_cast<size_t>(std::abs(unit))] =
              unit > 0 ? Val::True : Val::False;
          changed = true;
        }
      }
      if (changed) continue;
      // Pure-literal rule over clauses not yet satisfied.
      std::vector<char> pos(static_cast<size_t>(p.nvars) + 1, 0);
      std::vector<char> neg(static_cast<size_t>(p.nvars) + 1, 0);
      for (auto& c : p.clauses) {
        bool sat = false;
        for (int lit : c)
          if (lit_true(lit)) {
            sat = true;
            break;
          }
        if (sat) continue;
        for (int lit : c) {
          if (lit_false(lit)) continue;
          (lit > 0 ? pos : neg)[static_cast<size_t>(std::abs(lit))] = 1;
        }
      }
      for (int v = 1; v <= p.nvars; ++v) {
        auto vi = static_cast<size_t>(v);
        if (assign[vi] != Val::Unset) continue;
        if (pos[vi] && !neg[vi]) {
          assign[vi] = Val::True;
          changed = true;
        } else if (neg[vi] && !pos[vi]) {
          assign[vi] = Val::False;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<Val> saved = assign;
    if (!propagate()) {
      assign = saved;
      return false;
    }
    int branch = 0;
    for (int v = 1; v <= p.nvars; ++v)
      if (assign[static_cast<size_t>(v)] == Val::Unset) {
        branch = v;
        break;
      }
    if (branch == 0) return true;
    std::vector<Val> after_prop = assign;
    for (Val val : {Val::False, Val::True}) {
      assign = after_prop;
      assign[static_cast<size_t>(branch)] = val;
      if (search()) return true;
    }
    assign = saved;
    return false;
  }
};

}  // namespace

std::optional<SatAssignment> solve(const SatProblem& p) {
  if (p.nvars < 0) throw std::invalid_argument("negative variable count");
  for (auto& c : p.clauses)
    for (int lit : c)
      if (lit == 0 || std::abs(lit) > p.nvars)
        throw std::invalid_argument("literal out of range: " +
                                    std::to_string(lit));
  Solver s(p);
  if (!s.search()) return std::nullopt;
  SatAssignment a;
  a.values.assign(static_cast<size_t>(p.nvars) + 1, false);
  for (int v = 1; v <= p.nvars; ++v)
    a.values[static_cast<size_t>(v)] = s.assign[static_cast<size_t>(v)] == Val::True;
  for (auto& c : p.clauses) {
    bool sat = false;
    for (int lit : c)
      if (a.value(std::abs(lit)) == (lit > 0)) {
        sat = true;
        break;
      }
    if (!sat) throw std::logic_error("solver returned a non-model");
  }
  return a;
}

std::string to_dimacs(const SatProblem& p) {
  std::string out = "p cnf " + std::to_string(p.nvars) + " " +
                    std::to_string(p.clauses.size()) + "\n";
  for (auto& c : p.clauses) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

}  // namespace hoprep
