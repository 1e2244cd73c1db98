#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hoprep/type.hpp"

namespace hoprep {

enum class TermKind { FreeVar, Bound, Sym, App, Lam };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Terms are stored in eta-short beta-normal form; bound variables use
// de Bruijn indices, so alpha-equivalent terms are structurally equal.
struct Term {
  TermKind kind;
  std::string name;             // FreeVar, Sym
  std::vector<TypePtr> ty_args; // Sym
  int index = 0;                // Bound
  TypePtr ty;                   // type of the whole term
  TypePtr binder;               // Lam: type of the bound variable
  TermPtr f;                    // App: function; Lam: body
  TermPtr a;                    // App: argument
};

TermPtr mk_free(std::string name, TypePtr ty);
TermPtr mk_bound(int index, TypePtr ty);
TermPtr mk_sym(const Signature& sig, const std::string& name,
               std::vector<TypePtr> ty_args = {});
TermPtr mk_app(TermPtr fun, TermPtr arg);           // beta-normalizes
TermPtr mk_app(TermPtr fun, const std::vector<TermPtr>& args);
TermPtr mk_lam(TypePtr binder, TermPtr body);       // eta-normalizes

int term_compare(const TermPtr& s, const TermPtr& t);
bool term_equal(const TermPtr& s, const TermPtr& t);

// Head and arguments of an application spine.
TermPtr spine_head(const TermPtr& t);
std::vector<TermPtr> spine_args(const TermPtr& t);

bool is_sym(const TermPtr& t, const std::string& name);
bool symbol_occurs(const std::string& name, const TermPtr& t);
bool has_loose_bound(const TermPtr& t, int cutoff = 0);

// Combined capture-avoiding substitution: type variables, then free term
// variables (by name). Images must not contain loose de Bruijn indices.
struct Subst {
  TypeSubst ty;
  std::map<std::string, TermPtr> term;
  bool empty() const { return ty.empty() && term.empty(); }
};

TermPtr substitute(const TermPtr& t, const Subst& s);
TermPtr apply_ty_subst(const TermPtr& t, const TypeSubst& s);

// Replaces every occurrence of the symbol instance name<ty_args> by u,
// renormalizing. u must have the instance's type.
TermPtr replace_symbol(const TermPtr& t, const std::string& name,
                       const std::vector<TypePtr>& ty_args, const TermPtr& u);

void collect_free_vars(const TermPtr& t,
                       std::vector<std::pair<std::string, TypePtr>>& out);
void collect_term_type_vars(const TermPtr& t, std::vector<std::string>& out);

// Debug/canonical rendering with de Bruijn binders printed as x0, x1, ...
std::string term_to_string(const TermPtr& t);

// Logical-formula helpers.
TermPtr mk_true(const Signature& sig);
TermPtr mk_false(const Signature& sig);
TermPtr mk_not(const Signature& sig, TermPtr t);
TermPtr mk_or(const Signature& sig, TermPtr l, TermPtr r);
TermPtr mk_and(const Signature& sig, TermPtr l, TermPtr r);
TermPtr mk_eqb(const Signature& sig, TermPtr l, TermPtr r);
TermPtr mk_neqb(const Signature& sig, TermPtr l, TermPtr r);

}  // namespace hoprep
