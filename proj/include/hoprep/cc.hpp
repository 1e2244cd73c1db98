#pragma once

#include "hoprep/clause.hpp"

namespace hoprep {

// First-order congruence-closure tautology check. Free variables are frozen
// as fresh constants; lambda abstractions and all/ex-headed subterms are
// opaque constants shared across alpha-equivalent occurrences. Sound, not
// complete: true implies C is a tautology.
bool cc_valid(const Clause& c);

// Sound unsatisfiability check for ground clause sets by propositional
// abstraction: each distinct normalized ground atom becomes one variable
// (non-Boolean equations included) and the abstraction goes to the SAT
// solver. true implies N is unsatisfiable.
bool cc_ground_unsat(const ClauseSet& n);

}  // namespace hoprep
