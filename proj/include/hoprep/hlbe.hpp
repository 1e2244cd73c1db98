#pragma once

#include <optional>

#include "hoprep/clause.hpp"

namespace hoprep {

// One-way structural matching: returns s with pattern.s == target, or
// nullopt. A free variable is bindable only where it heads no application;
// an applied variable head matches only the syntactically identical head.
// Sound and incomplete.
std::optional<Subst> approx_match(const TermPtr& pattern, const TermPtr& target);

// Literal-level matching; tries both side orientations of the pattern.
std::optional<Subst> approx_match_literal(const Literal& pattern,
                                          const Literal& target);

// Hidden literals of L: closure up to `depth` chain steps under binary
// clauses of N used as implications, with approximate matching. Every
// returned literal h satisfies N |= h -> L on the matched instances.
std::vector<Literal> hidden_literals(const Literal& l, const ClauseSet& n,
                                     int depth);

struct HlbeResult {
  ClauseSet set;
  int literals_removed = 0;
  int clauses_removed = 0;
  int rounds = 0;
  std::vector<Literal> derived_units;
};

// Hidden literal elimination, hidden tautology elimination, and failed
// literal elimination, iterated to a fixpoint.
HlbeResult hlbe_simplify(const ClauseSet& n, int depth);

}  // namespace hoprep
