#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoprep/term.hpp"

namespace hoprep {

// An equation (positive) or disequation (negative) between two terms of a
// shared type. The sides form an unordered pair for comparison purposes but
// keep their construction order. A Boolean equation against false is
// normalized to the complement form against true.
struct Literal {
  bool positive;
  TermPtr lhs;
  TermPtr rhs;
};

Literal mk_literal(const Signature& sig, bool positive, TermPtr lhs, TermPtr rhs);
// Predicate-literal sugar: atom = true / atom != true.
Literal mk_pred_literal(const Signature& sig, bool positive, TermPtr atom);

Literal complement(const Literal& l);
bool literal_equal(const Literal& a, const Literal& b);
int literal_compare(const Literal& a, const Literal& b);
Literal literal_substitute(const Literal& l, const Subst& s);
std::string literal_to_string(const Literal& l);

// Decomposition of a p-literal (-)p<tys> args; one side must be true and the
// other headed by a declared non-logical symbol.
struct PLitView {
  std::string symbol;
  bool positive;
  std::vector<TypePtr> ty_args;
  std::vector<TermPtr> args;
  TermPtr atom;
};

std::optional<PLitView> predicate_literal_view(const Literal& l);

struct Clause {
  std::vector<Literal> lits;
};

Clause clause_substitute(const Clause& c, const Subst& s);
bool clause_equal(const Clause& a, const Clause& b);  // literal multisets
int clause_compare(const Clause& a, const Clause& b);
std::string clause_to_string(const Clause& c);

// Clauses equal after canonical renaming of their free type/term variables.
bool clause_alpha_equal(const Clause& a, const Clause& b);
Clause canonicalize_clause_vars(const Clause& c);

std::vector<std::pair<std::string, TypePtr>> clause_free_vars(const Clause& c);
std::vector<std::string> clause_type_vars(const Clause& c);

bool occurs_deep(const std::string& p, const Clause& c);
bool symbol_occurs_in_clause(const std::string& p, const Clause& c);
int count_p_literals(const std::string& p, const Clause& c);

struct ClauseSet {
  Signature sig;
  std::vector<Clause> clauses;
};

bool occurs_deep_in_set(const std::string& p, const ClauseSet& n);
bool is_singular(const std::string& p, const ClauseSet& n);
bool is_polymorphism_safe(const Clause& c, const std::string& p);
bool symbol_occurs_in_set(const std::string& p, const ClauseSet& n);

// [C]: the clause as a formula, with predicate-literal abbreviations kept
// (t = true becomes t, t != true becomes not t) and the empty clause
// becoming false.
TermPtr clause_to_formula(const Signature& sig, const Clause& c);

// Renames the free type and term variables of c so they are disjoint from
// `used_terms`/`used_tys`; extends both sets with the resulting names.
Clause rename_apart(const Clause& c, std::vector<std::string>& used_terms,
                    std::vector<std::string>& used_tys);

bool clause_set_equal_upto_alpha(const std::vector<Clause>& a,
                                 const std::vector<Clause>& b);

}  // namespace hoprep
