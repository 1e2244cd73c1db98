#pragma once

#include <string>

#include "hoprep/parser.hpp"

namespace hoprep::test {

// Shared vocabulary for most tests: one base type, a few constants,
// functions, and predicates.
inline std::string prelude() {
  return R"((type i 0)
(sym a i)
(sym b i)
(sym c i)
(sym d i)
(sym e i)
(sym f (-> i i))
(sym g (-> i i))
(sym h (-> i i i))
(sym p (-> i o))
(sym q (-> i o))
(sym r (-> i o))
(sym p2 (-> i i o))
(sym q2 (-> i i o))
(sym pa o)
(sym pb o)
(sym pc o)
)";
}

inline ClauseSet parse_with_prelude(const std::string& body) {
  return parse_problem(prelude() + body);
}

// The single clause of a one-clause problem.
inline Clause clause1(const std::string& body) {
  return parse_with_prelude(body).clauses.at(0);
}

}  // namespace hoprep::test
