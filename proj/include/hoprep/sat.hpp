#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hoprep {

// CNF problem over variables 1..nvars; literals are nonzero integers in
// +-[1..nvars].
struct SatProblem {
  int nvars = 0;
  std::vector<std::vector<int>> clauses;
};

// Total assignment: value(v) for v in 1..nvars.
struct SatAssignment {
  std::vector<bool> values;  // index 0 unused
  bool value(int var) const { return values[static_cast<size_t>(var)]; }
};

// Deterministic DPLL with unit propagation and the pure-literal rule.
// Branching picks the lowest-index unassigned variable, false first. A SAT
// answer is verified against every clause before it is returned.
// Throws std::invalid_argument on malformed input (zero literal, variable
// out of range).
std::optional<SatAssignment> solve(const SatProblem& p);

// DIMACS-compatible text: "p cnf n m" header, clauses terminated by 0.
std::string to_dimacs(const SatProblem& p);

}  // namespace hoprep
