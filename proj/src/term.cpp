#include "hoprep/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoprep {

TermPtr mk_free(std::string name, TypePtr ty) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::FreeVar;
  t->name = std::move(name);
  t->ty = std::move(ty);
  return t;
}

TermPtr mk_bound(int index, TypePtr ty) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Bound;
  t->index = index;
  t->ty = std::move(ty);
  return t;
}

TermPtr mk_sym(const Signature& sig, const std::string& name,
               std::vector<TypePtr> ty_args) {
  auto it = sig.symbols.find(name);
  if (it == sig.symbols.end())
    throw std::invalid_argument("unknown symbol: " + name);
  const TypeScheme& sch = it->second;
  if (sch.vars.size() != ty_args.size())
    throw std::invalid_argument("symbol " + name + " expects " +
                                std::to_string(sch.vars.size()) +
                                " type arguments");
  TypeSubst s;
  for (size_t i = 0; i < sch.vars.size(); ++i) s[sch.vars[i]] = ty_args[i];
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Sym;
  t->name = name;
  t->ty_args = std::move(ty_args);
  t->ty = apply_ty(s, sch.body);
  return t;
}

static TermPtr shift(const TermPtr& t, int d, int cutoff) {
  switch (t->kind) {
    case TermKind::FreeVar:
    case TermKind::Sym:
      return t;
    case TermKind::Bound:
      if (t->index < cutoff) return t;
      return mk_bound(t->index + d, t->ty);
    case TermKind::App: {
      auto r = std::make_shared<Term>(*t);
      r->f = shift(t->f, d, cutoff);
      r->a = shift(t->a, d, cutoff);
      return r;
    }
    case TermKind::Lam: {
      auto r = std::make_shared<Term>(*t);
      r->f = shift(t->f, d, cutoff + 1);
      return r;
    }
  }
  throw std::logic_error("shift: bad kind");
}

// Substitutes u for index k in t, decrementing indices above k. Rebuilds
// through the smart constructors so created redexes are reduced.
static TermPtr subst_bound(const TermPtr& t, int k, const TermPtr& u) {
  switch (t->kind) {
    case TermKind::FreeVar:
    case TermKind::Sym:
      return t;
    case TermKind::Bound:
      if (t->index == k) return shift(u, k, 0);
      if (t->index > k) return mk_bound(t->index - 1, t->ty);
      return t;
    case TermKind::App:
      return mk_app(subst_bound(t->f, k, u), subst_bound(t->a, k, u));
    case TermKind::Lam:
      return mk_lam(t->binder, subst_bound(t->f, k + 1, u));
  }
  throw std::logic_error("subst_bound: bad kind");
}

TermPtr mk_app(TermPtr fun, TermPtr arg) {
  if (!is_fun(fun->ty))
    throw std::invalid_argument("mk_app: applying non-function of type " +
                                type_to_string(fun->ty));
  if (!type_equal(fun->ty->args[0], arg->ty))
    throw std::invalid_argument("mk_app: argument type mismatch: expected " +
                                type_to_string(fun->ty->args[0]) + ", got " +
                                type_to_string(arg->ty));
  if (fun->kind == TermKind::Lam) return subst_bound(fun->f, 0, arg);
  auto t = std::make_shared<Term>();
  t->kind = TermKind::App;
  t->f = std::move(fun);
  t->a = std::move(arg);
  t->ty = t->f->ty->args[1];
  return t;
}

TermPtr mk_app(TermPtr fun, const std::vector<TermPtr>& args) {
  for (auto& a : args) fun = mk_app(fun, a);
  return fun;
}

bool has_loose_bound(const TermPtr& t, int cutoff) {
  switch (t->kind) {
    case TermKind::FreeVar:
    case TermKind::Sym:
      return false;
    case TermKind::Bound:
      return t->index >= cutoff;
    case TermKind::App:
      return has_loose_bound(t->f, cutoff) || has_loose_bound(t->a, cutoff);
    case TermKind::Lam:
      return has_loose_bound(t->f, cutoff + 1);
  }
  throw std::logic_error("has_loose_bound: bad kind");
}

TermPtr mk_lam(TypePtr binder, TermPtr body) {
  // eta: lam x. f x  ->  f  when x is not free in f.
  if (body->kind == TermKind::App && body->a->kind == TermKind::Bound &&
      body->a->index == 0 && !has_loose_bound(body->f, 1))
    return shift(body->f, -1, 0);
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Lam;
  t->binder = binder;
  t->f = std::move(body);
  t->ty = ty_fun(std::move(binder), t->f->ty);
  return t;
}

int term_compare(const TermPtr& s, const TermPtr& t) {
  if (s.get() == t.get()) return 0;
  if (s->kind != t->kind) return s->kind < t->kind ? -1 : 1;
  switch (s->kind) {
    case TermKind::FreeVar:
      if (int c = s->name.compare(t->name)) return c < 0 ? -1 : 1;
      return type_compare(s->ty, t->ty);
    case TermKind::Bound:
      if (s->index != t->index) return s->index < t->index ? -1 : 1;
      return 0;
    case TermKind::Sym: {
      if (int c = s->name.compare(t->name)) return c < 0 ? -1 : 1;
      if (s->ty_args.size() != t->ty_args.size())
        return s->ty_args.size() < t->ty_args.size() ? -1 : 1;
      for (size_t i = 0; i < s->ty_args.size(); ++i)
        if (int c = type_compare(s->ty_args[i], t->ty_args[i])) return c;
      return 0;
    }
    case TermKind::App:
      if (int c = term_compare(s->f, t->f)) return c;
      return term_compare(s->a, t->a);
    case TermKind::Lam:
      if (int c = type_compare(s->binder, t->binder)) return c;
      return term_compare(s->f, t->f);
  }
  throw std::logic_error("term_compare: bad kind");
}

bool term_equal(const TermPtr& s, const TermPtr& t) {
  return term_compare(s, t) == 0;
}

TermPtr spine_head(const TermPtr& t) {
  TermPtr cur = t;
  while (cur->kind == TermKind::App) cur = cur->f;
  return cur;
}

std::vector<TermPtr> spine_args(const TermPtr& t) {
  std::vector<TermPtr> args;
  TermPtr cur = t;
  while (cur->kind == TermKind::App) {
    args.push_back(cur->a);
    cur = cur->f;
  }
  std::reverse(args.begin(), args.end());
  return args;
}

bool is_sym(const TermPtr& t, const std::string& name) {
  return t->kind == TermKind::Sym && t->name == name;
}

bool symbol_occurs(const std::string& name, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::FreeVar:
    case TermKind::Bound:
      return false;
    case TermKind::Sym:
      return t->name == name;
    case TermKind::App:
      return symbol_occurs(name, t->f) || symbol_occurs(name, t->a);
    case TermKind::Lam:
      return symbol_occurs(name, t->f);
  }
  throw std::logic_error("symbol_occurs: bad kind");
}

TermPtr substitute(const TermPtr& t, const Subst& s) {
  switch (t->kind) {
    case TermKind::FreeVar: {
      auto it = s.term.find(t->name);
      if (it != s.term.end()) {
        // Images are taken as-is; callers pre-apply the type part to them.
        TypePtr want = apply_ty(s.ty, t->ty);
        if (!type_equal(it->second->ty, want))
          throw std::invalid_argument("substitute: image type mismatch for " +
                                      t->name);
        return it->second;
      }
      TypePtr nty = apply_ty(s.ty, t->ty);
      return nty.get() == t->ty.get() ? t : mk_free(t->name, nty);
    }
    case TermKind::Bound: {
      TypePtr nty = apply_ty(s.ty, t->ty);
      return nty.get() == t->ty.get() ? t : mk_bound(t->index, nty);
    }
    case TermKind::Sym: {
      if (s.ty.empty()) return t;
      auto r = std::make_shared<Term>(*t);
      for (auto& ta : r->ty_args) ta = apply_ty(s.ty, ta);
      r->ty = apply_ty(s.ty, t->ty);
      return r;
    }
    case TermKind::App:
      return mk_app(substitute(t->f, s), substitute(t->a, s));
    case TermKind::Lam:
      return mk_lam(apply_ty(s.ty, t->binder), substitute(t->f, s));
  }
  throw std::logic_error("substitute: bad kind");
}

TermPtr apply_ty_subst(const TermPtr& t, const TypeSubst& s) {
  if (s.empty()) return t;
  Subst sub;
  sub.ty = s;
  return substitute(t, sub);
}

TermPtr replace_symbol(const TermPtr& t, const std::string& name,
                       const std::vector<TypePtr>& ty_args, const TermPtr& u) {
  switch (t->kind) {
    case TermKind::FreeVar:
    case TermKind::Bound:
      return t;
    case TermKind::Sym: {
      if (t->name != name || t->ty_args.size() != ty_args.size()) return t;
      for (size_t i = 0; i < ty_args.size(); ++i)
        if (!type_equal(t->ty_args[i], ty_args[i])) return t;
      if (!type_equal(u->ty, t->ty))
        throw std::invalid_argument("replace_symbol: replacement type mismatch");
      return u;
    }
    case TermKind::App:
      return mk_app(replace_symbol(t->f, name, ty_args, u),
                    replace_symbol(t->a, name, ty_args, u));
    case TermKind::Lam:
      return mk_lam(t->binder, replace_symbol(t->f, name, ty_args, u));
  }
  throw std::logic_error("replace_symbol: bad kind");
}

void collect_free_vars(const TermPtr& t,
                       std::vector<std::pair<std::string, TypePtr>>& out) {
  switch (t->kind) {
    case TermKind::FreeVar: {
      for (auto& [n, ty] : out)
        if (n == t->name) return;
      out.emplace_back(t->name, t->ty);
      return;
    }
    case TermKind::Bound:
    case TermKind::Sym:
      return;
    case TermKind::App:
      collect_free_vars(t->f, out);
      collect_free_vars(t->a, out);
      return;
    case TermKind::Lam:
      collect_free_vars(t->f, out);
      return;
  }
}

void collect_term_type_vars(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case TermKind::FreeVar:
    case TermKind::Bound:
      collect_type_vars(t->ty, out);
      return;
    case TermKind::Sym:
      for (auto& ta : t->ty_args) collect_type_vars(ta, out);
      collect_type_vars(t->ty, out);
      return;
    case TermKind::App:
      collect_term_type_vars(t->f, out);
      collect_term_type_vars(t->a, out);
      return;
    case TermKind::Lam:
      collect_type_vars(t->binder, out);
      collect_term_type_vars(t->f, out);
      return;
  }
}

// atom_pos: the term needs no parentheses even when compound.
static void to_string_rec(const TermPtr& t, int depth, bool atom_pos,
                          std::string& out) {
  switch (t->kind) {
    case TermKind::FreeVar:
      out += t->name;
      return;
    case TermKind::Bound:
      out += "x" + std::to_string(depth - 1 - t->index);
      return;
    case TermKind::Sym:
      out += t->name;
      for (auto& ta : t->ty_args) out += "<" + type_to_string(ta) + ">";
      return;
    case TermKind::App: {
      if (!atom_pos) out += "(";
      TermPtr head = spine_head(t);
      to_string_rec(head, depth, false, out);
      std::vector<TermPtr> args = spine_args(t);
      for (auto& a : args) {
        out += " ";
        bool atomic = a->kind != TermKind::App && a->kind != TermKind::Lam &&
                      !(a->kind == TermKind::Sym && !a->ty_args.empty());
        to_string_rec(a, depth, atomic, out);
      }
      if (!atom_pos) out += ")";
      return;
    }
    case TermKind::Lam:
      out += "(lam x" + std::to_string(depth) + ". ";
      to_string_rec(t->f, depth + 1, true, out);
      out += ")";
      return;
  }
}

std::string term_to_string(const TermPtr& t) {
  std::string s;
  to_string_rec(t, 0, true, s);
  return s;
}

TermPtr mk_true(const Signature& sig) { return mk_sym(sig, "true"); }
TermPtr mk_false(const Signature& sig) { return mk_sym(sig, "false"); }
TermPtr mk_not(const Signature& sig, TermPtr t) {
  return mk_app(mk_sym(sig, "not"), std::move(t));
}
TermPtr mk_or(const Signature& sig, TermPtr l, TermPtr r) {
  return mk_app(mk_app(mk_sym(sig, "or"), std::move(l)), std::move(r));
}
TermPtr mk_and(const Signature& sig, TermPtr l, TermPtr r) {
  return mk_app(mk_app(mk_sym(sig, "and"), std::move(l)), std::move(r));
}
TermPtr mk_eqb(const Signature& sig, TermPtr l, TermPtr r) {
  TypePtr ty = l->ty;
  return mk_app(mk_app(mk_sym(sig, "eqb", {ty}), std::move(l)), std::move(r));
}
TermPtr mk_neqb(const Signature& sig, TermPtr l, TermPtr r) {
  TypePtr ty = l->ty;
  return mk_app(mk_app(mk_sym(sig, "neqb", {ty}), std::move(l)), std::move(r));
}

}  // namespace hoprep
