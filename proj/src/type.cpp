#include "hoprep/type.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoprep {

TypePtr ty_var(std::string name) {
  auto t = std::make_shared<TypeExpr>();
  t->is_var = true;
  t->name = std::move(name);
  return t;
}

TypePtr ty_ctor(std::string name, std::vector<TypePtr> args) {
  auto t = std::make_shared<TypeExpr>();
  t->is_var = false;
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

TypePtr ty_bool() {
  static const TypePtr o = ty_ctor("o");
  return o;
}

TypePtr ty_fun(TypePtr from, TypePtr to) {
  return ty_ctor("->", {std::move(from), std::move(to)});
}

bool is_bool(const TypePtr& t) { return !t->is_var && t->name == "o"; }
bool is_fun(const TypePtr& t) { return !t->is_var && t->name == "->"; }

int type_compare(const TypePtr& a, const TypePtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->is_var != b->is_var) return a->is_var ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  if (a->args.size() != b->args.size())
    return a->args.size() < b->args.size() ? -1 : 1;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (int c = type_compare(a->args[i], b->args[i])) return c;
  return 0;
}

bool type_equal(const TypePtr& a, const TypePtr& b) {
  return type_compare(a, b) == 0;
}

// Arrows associate to the right; only a function type on the left of an
// arrow needs parentheses.
static std::string type_str(const TypePtr& t, bool left_of_arrow) {
  if (t->is_var || t->args.empty()) return t->name;
  if (is_fun(t)) {
    std::string s =
        type_str(t->args[0], true) + " -> " + type_str(t->args[1], false);
    return left_of_arrow ? "(" + s + ")" : s;
  }
  std::string s = "(" + t->name;
  for (auto& a : t->args) s += " " + type_str(a, false);
  return s + ")";
}

std::string type_to_string(const TypePtr& t) { return type_str(t, false); }

std::pair<std::vector<TypePtr>, TypePtr> strip_fun(const TypePtr& t) {
  std::vector<TypePtr> args;
  TypePtr cur = t;
  while (is_fun(cur)) {
    args.push_back(cur->args[0]);
    cur = cur->args[1];
  }
  return {args, cur};
}

TypePtr apply_ty(const TypeSubst& s, const TypePtr& t) {
  if (t->is_var) {
    auto it = s.find(t->name);
    return it == s.end() ? t : it->second;
  }
  if (t->args.empty()) return t;
  std::vector<TypePtr> args;
  args.reserve(t->args.size());
  bool changed = false;
  for (auto& a : t->args) {
    args.push_back(apply_ty(s, a));
    changed = changed || args.back().get() != a.get();
  }
  return changed ? ty_ctor(t->name, std::move(args)) : t;
}

static bool occurs(const std::string& v, const TypePtr& t) {
  if (t->is_var) return t->name == v;
  for (auto& a : t->args)
    if (occurs(v, a)) return true;
  return false;
}

static bool unify_one(TypePtr a, TypePtr b, TypeSubst& s) {
  a = apply_ty(s, a);
  b = apply_ty(s, b);
  if (a->is_var && b->is_var && a->name == b->name) return true;
  if (a->is_var || b->is_var) {
    if (!a->is_var) std::swap(a, b);
    if (occurs(a->name, b)) return false;
    // Keep the substitution idempotent: rewrite existing images first.
    TypeSubst one{{a->name, b}};
    for (auto& [k, v] : s) v = apply_ty(one, v);
    s[a->name] = b;
    return true;
  }
  if (a->name != b->name || a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!unify_one(a->args[i], b->args[i], s)) return false;
  return true;
}

std::optional<TypeSubst> unify_types(const std::vector<TypePtr>& as,
                                     const std::vector<TypePtr>& bs) {
  if (as.size() != bs.size())
    throw std::invalid_argument("unify_types: list length mismatch");
  TypeSubst s;
  for (size_t i = 0; i < as.size(); ++i)
    if (!unify_one(as[i], bs[i], s)) return std::nullopt;
  return s;
}

void collect_type_vars(const TypePtr& t, std::vector<std::string>& out) {
  if (t->is_var) {
    if (std::find(out.begin(), out.end(), t->name) == out.end())
      out.push_back(t->name);
    return;
  }
  for (auto& a : t->args) collect_type_vars(a, out);
}

Signature Signature::with_builtins() {
  Signature sig;
  sig.type_ctors["o"] = 0;
  sig.type_ctors["->"] = 2;
  const TypePtr o = ty_bool();
  auto mono = [&](const char* n, TypePtr t) { sig.symbols[n] = TypeScheme{{}, t}; };
  mono("true", o);
  mono("false", o);
  mono("not", ty_fun(o, o));
  mono("and", ty_fun(o, ty_fun(o, o)));
  mono("or", ty_fun(o, ty_fun(o, o)));
  mono("imp", ty_fun(o, ty_fun(o, o)));
  TypePtr a = ty_var("A");
  sig.symbols["all"] = TypeScheme{{"A"}, ty_fun(ty_fun(a, o), o)};
  sig.symbols["ex"] = TypeScheme{{"A"}, ty_fun(ty_fun(a, o), o)};
  sig.symbols["eqb"] = TypeScheme{{"A"}, ty_fun(a, ty_fun(a, o))};
  sig.symbols["neqb"] = TypeScheme{{"A"}, ty_fun(a, ty_fun(a, o))};
  sig.symbols["choice"] = TypeScheme{{"A"}, ty_fun(ty_fun(a, o), a)};
  return sig;
}

bool Signature::is_logical(const std::string& n) {
  static const std::vector<std::string> logical = {
      "true", "false", "not",  "and",  "or",     "imp",
      "all",  "ex",    "eqb",  "neqb", "choice"};
  return std::find(logical.begin(), logical.end(), n) != logical.end();
}

bool Signature::is_predicate_symbol(const std::string& n) const {
  if (is_logical(n)) return false;
  auto it = symbols.find(n);
  if (it == symbols.end()) return false;
  auto [args, res] = strip_fun(it->second.body);
  (void)args;
  return is_bool(res) || res->is_var;
}

void Signature::declare_type_ctor(const std::string& n, int arity) {
  if (has_type_ctor(n)) throw std::invalid_argument("duplicate type constructor: " + n);
  type_ctors[n] = arity;
  type_decl_order.push_back(n);
}

void Signature::declare_symbol(const std::string& n, TypeScheme sch) {
  if (has_symbol(n)) throw std::invalid_argument("duplicate symbol: " + n);
  symbols[n] = std::move(sch);
  decl_order.push_back(n);
}

void Signature::remove_symbol(const std::string& n) {
  symbols.erase(n);
  decl_order.erase(std::remove(decl_order.begin(), decl_order.end(), n),
                   decl_order.end());
}

std::vector<std::string> Signature::predicate_symbols() const {
  std::vector<std::string> out;
  for (auto& n : decl_order)
    if (is_predicate_symbol(n)) out.push_back(n);
  return out;
}

}  // namespace hoprep
