#pragma once

#include <optional>
#include <stdexcept>

#include "hoprep/clause.hpp"

namespace hoprep {

class FragmentUnsupported : public std::runtime_error {
 public:
  explicit FragmentUnsupported(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Exact satisfiability for ground propositional-shaped sets: every literal
// is an atom (dis)equated with true, atoms are ground, headed by a
// non-logical symbol, contain no logical symbols, lambdas, or Boolean proper
// subterms, and there are at most 24 distinct atoms. Distinct atoms are
// independent in this fragment, so the propositional abstraction is exact.
bool ground_prop_sat(const ClauseSet& n);

// Exhaustive finite-model search for ground first-order sets over base-type
// constants (at most 3 per base type) and unary functions (at most 2 per
// base type). All base types share a common domain size. Returns the least
// size in 1..max_domain admitting a model, or nullopt.
std::optional<int> finite_model_sat(const ClauseSet& n, int max_domain);

}  // namespace hoprep
