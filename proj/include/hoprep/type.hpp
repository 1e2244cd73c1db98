#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hoprep {

struct TypeExpr;
using TypePtr = std::shared_ptr<const TypeExpr>;

// A type is either a variable or a constructor application. `o` is the
// Boolean type; `->` is the binary function type constructor.
struct TypeExpr {
  bool is_var = false;
  std::string name;            // variable name or constructor name
  std::vector<TypePtr> args;   // empty for variables
};

TypePtr ty_var(std::string name);
TypePtr ty_ctor(std::string name, std::vector<TypePtr> args = {});
TypePtr ty_bool();
TypePtr ty_fun(TypePtr from, TypePtr to);

bool is_bool(const TypePtr& t);
bool is_fun(const TypePtr& t);

int type_compare(const TypePtr& a, const TypePtr& b);
bool type_equal(const TypePtr& a, const TypePtr& b);
std::string type_to_string(const TypePtr& t);

// Splits t1 -> ... -> tn -> r into ({t1..tn}, r).
std::pair<std::vector<TypePtr>, TypePtr> strip_fun(const TypePtr& t);

using TypeSubst = std::map<std::string, TypePtr>;

TypePtr apply_ty(const TypeSubst& s, const TypePtr& t);

// Most general unifier of the elementwise problem as = bs, or nullopt.
// Requires equal list lengths.
std::optional<TypeSubst> unify_types(const std::vector<TypePtr>& as,
                                     const std::vector<TypePtr>& bs);

void collect_type_vars(const TypePtr& t, std::vector<std::string>& out);

struct TypeScheme {
  std::vector<std::string> vars;  // distinct bound type variables
  TypePtr body;
};

// Type-constructor arities, symbol declarations, and the fixed logical
// symbols. Declaration order is preserved for deterministic output.
struct Signature {
  std::map<std::string, int> type_ctors;
  std::map<std::string, TypeScheme> symbols;
  std::vector<std::string> type_decl_order;  // user constructors only
  std::vector<std::string> decl_order;       // user symbols only

  static Signature with_builtins();

  bool has_type_ctor(const std::string& n) const { return type_ctors.count(n) != 0; }
  bool has_symbol(const std::string& n) const { return symbols.count(n) != 0; }
  const TypeScheme& scheme(const std::string& n) const { return symbols.at(n); }

  static bool is_logical(const std::string& n);

  // A symbol whose scheme admits an instance of shape u1 -> ... -> un -> o.
  // Logical symbols are excluded.
  bool is_predicate_symbol(const std::string& n) const;

  void declare_type_ctor(const std::string& n, int arity);
  void declare_symbol(const std::string& n, TypeScheme sch);
  void remove_symbol(const std::string& n);

  // User predicate symbols in declaration order.
  std::vector<std::string> predicate_symbols() const;
};

}  // namespace hoprep
