#pragma once

#include <optional>
#include <string>

#include "hoprep/clause.hpp"

namespace hoprep {

// lambda(N), mu(N), |N|. mu sums the squared number of distinct free term
// variables per clause; type variables are not counted.
struct GrowthMetrics {
  long long literals = 0;
  long long var_square_sum = 0;
  long long clauses = 0;
};

GrowthMetrics growth_metrics(const ClauseSet& n);

// Accepts the transformation iff literals grew by less than k_tol, or mu
// shrank, or the clause count grew by less than k_tol. Differences are
// compared directly so LLONG_MAX works as "no limit".
bool growth_check(const GrowthMetrics& before, const GrowthMetrics& after,
                  long long k_tol);

// Flat resolvent of the positive p-literal c.lits[lc] against the negative
// p-literal d.lits[ld]: type arguments are unified, term arguments become
// disequations. The clauses must already be renamed apart.
std::optional<Clause> flat_resolvent(const Signature& sig, const Clause& c,
                                     size_t lc, const Clause& d, size_t ld);

// The resolved set M |x|_p N: clauses of N carrying p-literals are replaced
// by all their flat resolvents against opposite-polarity p-clauses of M
// until no p-literal remains. Requires p singular for M.
std::vector<Clause> resolved_set(const ClauseSet& m,
                                 const std::vector<Clause>& n,
                                 const std::string& p);

// Singular predicate elimination. nullopt when p is not singular for N or
// some clause is not polymorphism-safe for p. The result drops p from the
// signature and contains no occurrence of p.
std::optional<ClauseSet> spe(const ClauseSet& n, const std::string& p);

struct DefinitionSet {
  std::string p;
  std::vector<size_t> indices;  // positions of G within the input set
  std::vector<Clause> clauses;  // canonical form: p-literal atom is p<as> xs
  std::vector<std::string> alpha;
  std::vector<std::pair<std::string, TypePtr>> xs;
  TermPtr phi;  // definition body; no p, vars within alpha/xs
};

// Checks the candidate consisting of every clause of N whose p-literal has
// distinct-variable arguments. The tautology condition uses cc_valid and
// the environment condition uses cc_ground_unsat; both are sound, so a
// genuine definition set may be missed but a wrong one is never accepted.
std::optional<DefinitionSet> find_definition_set(const ClauseSet& n,
                                                 const std::string& p);

// The formula p<as> xs <->b phi as a term (Boolean equality as iff).
TermPtr associated_definition(const Signature& sig, const DefinitionSet& g);

// Defined predicate elimination: resolves the p-literals of R = Np \ G away
// against G and replaces every remaining instance p<ts> by
// lambda xs. phi{as -> ts}. The result contains no p.
ClauseSet dpe(const ClauseSet& n, const std::string& p, const DefinitionSet& g);

enum class PeBranch { Dpe, Spe, NotApplicable };

struct PpeOutcome {
  PeBranch branch = PeBranch::NotApplicable;
  ClauseSet set;
};

// Portfolio: DPE when a definition set exists, else SPE gated by the growth
// check.
PpeOutcome ppe(const ClauseSet& n, const std::string& p, long long k_tol);

enum class PeMode { SpeOnly, DpeOnly, Portfolio };

struct PeResult {
  ClauseSet set;
  std::vector<std::pair<std::string, PeBranch>> eliminated;
  int rounds = 0;
};

// Iterates over occurring predicate symbols in declaration order,
// recomputing candidates after every successful elimination.
PeResult run_pe(const ClauseSet& n, PeMode mode, long long k_tol,
                int max_passes);

}  // namespace hoprep
