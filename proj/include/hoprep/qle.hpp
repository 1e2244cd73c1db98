#pragma once

#include <map>
#include <optional>
#include <string>

#include "hoprep/clause.hpp"
#include "hoprep/sat.hpp"

namespace hoprep {

// Polarity map restricted to the symbols of interest; true = positive.
using PolarityMap = std::map<std::string, bool>;

// Every clause containing any occurrence of a symbol of P (deep ones
// included) must carry a q-literal with polarity m_q for some q in P.
bool is_quasipure(const std::vector<std::string>& p_set, const PolarityMap& m,
                  const ClauseSet& n);

// SAT encoding with two variables per occurring predicate symbol: for the
// k-th symbol of `symbols`, 2k+1 encodes "quasipure positive" and 2k+2
// "quasipure negative".
struct QleEncoding {
  SatProblem problem;
  std::vector<std::string> symbols;  // declaration order, occurring only
  int pos_var(size_t k) const { return static_cast<int>(2 * k + 1); }
  int neg_var(size_t k) const { return static_cast<int>(2 * k + 2); }
};

QleEncoding encode_qle(const ClauseSet& n);

struct QuasipureResult {
  std::vector<std::string> p_set;
  PolarityMap m;
};

std::optional<QuasipureResult> find_quasipure_set(const ClauseSet& n);

struct QleResult {
  ClauseSet set;
  int clauses_removed = 0;
  int rounds = 0;
  std::vector<QuasipureResult> witnesses;
};

// Iterated quasipure literal elimination; `var_order_seed` permutes the SAT
// variable numbering for confluence testing only.
QleResult run_qle(const ClauseSet& n, unsigned var_order_seed = 0);

// Pure literal elimination: the single-polarity, never-deep restriction.
QleResult run_ple(const ClauseSet& n);

}  // namespace hoprep
