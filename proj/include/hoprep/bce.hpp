#pragma once

#include <optional>
#include <string>

#include "hoprep/clause.hpp"

namespace hoprep {

// Binary flat L-resolvent of the p-literal c.lits[lc] against the
// opposite-polarity p-literal d.lits[ld]: only the two chosen literals are
// resolved, regardless of other p-literals. Clauses must be renamed apart.
std::optional<Clause> binary_flat_l_resolvent(const Signature& sig,
                                              const Clause& c, size_t lc,
                                              const Clause& d, size_t ld);

// Audit trail for one positive blockedness verdict.
struct BlockednessCertificate {
  size_t clause_index = 0;
  Literal blocking;
  struct Partner {
    size_t partner_index;
    Clause resolvent;
  };
  std::vector<Partner> partners;  // every resolvent passed cc_valid
};

// The four-condition blockedness test for the p-literal c.lits[li] against
// N minus c (given by index ci). Throws std::invalid_argument when the
// chosen literal is not a predicate literal.
bool is_blocked(const ClauseSet& n, size_t ci, size_t li,
                BlockednessCertificate* cert = nullptr);

struct BceResult {
  ClauseSet set;
  int clauses_removed = 0;
  std::vector<BlockednessCertificate> certificates;
};

// Removes blocked clauses to the fixpoint. The scan order is permuted by
// `order_seed` for confluence testing; the result is order independent.
BceResult run_bce(const ClauseSet& n, unsigned order_seed = 0);

}  // namespace hoprep
