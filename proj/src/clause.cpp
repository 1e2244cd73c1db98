#include "hoprep/clause.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hoprep {

Literal mk_literal(const Signature& sig, bool positive, TermPtr lhs, TermPtr rhs) {
  if (!type_equal(lhs->ty, rhs->ty))
    throw std::invalid_argument("literal sides have different types: " +
                                type_to_string(lhs->ty) + " vs " +
                                type_to_string(rhs->ty));
  // t = false (t : o) becomes t != true, and dually.
  if (is_bool(lhs->ty)) {
    if (is_sym(rhs, "false")) {
      rhs = mk_true(sig);
      positive = !positive;
    } else if (is_sym(lhs, "false")) {
      lhs = mk_true(sig);
      positive = !positive;
    }
  }
  return Literal{positive, std::move(lhs), std::move(rhs)};
}

Literal mk_pred_literal(const Signature& sig, bool positive, TermPtr atom) {
  if (!is_bool(atom->ty))
    throw std::invalid_argument("predicate literal atom must have type o");
  return mk_literal(sig, positive, std::move(atom), mk_true(sig));
}

Literal complement(const Literal& l) { return Literal{!l.positive, l.lhs, l.rhs}; }

int literal_compare(const Literal& a, const Literal& b) {
  if (a.positive != b.positive) return a.positive ? 1 : -1;
  // Unordered sides: compare canonically ordered pairs.
  const TermPtr& amin = term_compare(a.lhs, a.rhs) <= 0 ? a.lhs : a.rhs;
  const TermPtr& amax = term_compare(a.lhs, a.rhs) <= 0 ? a.rhs : a.lhs;
  const TermPtr& bmin = term_compare(b.lhs, b.rhs) <= 0 ? b.lhs : b.rhs;
  const TermPtr& bmax = term_compare(b.lhs, b.rhs) <= 0 ? b.rhs : b.lhs;
  if (int c = term_compare(amin, bmin)) return c;
  return term_compare(amax, bmax);
}

bool literal_equal(const Literal& a, const Literal& b) {
  return literal_compare(a, b) == 0;
}

Literal literal_substitute(const Literal& l, const Subst& s) {
  return Literal{l.positive, substitute(l.lhs, s), substitute(l.rhs, s)};
}

std::string literal_to_string(const Literal& l) {
  return term_to_string(l.lhs) + (l.positive ? " = " : " != ") +
         term_to_string(l.rhs);
}

std::optional<PLitView> predicate_literal_view(const Literal& l) {
  TermPtr atom;
  if (is_sym(l.rhs, "true"))
    atom = l.lhs;
  else if (is_sym(l.lhs, "true"))
    atom = l.rhs;
  else
    return std::nullopt;
  if (!is_bool(atom->ty)) return std::nullopt;
  TermPtr head = spine_head(atom);
  if (head->kind != TermKind::Sym || Signature::is_logical(head->name))
    return std::nullopt;
  return PLitView{head->name, l.positive, head->ty_args, spine_args(atom), atom};
}

Clause clause_substitute(const Clause& c, const Subst& s) {
  Clause out;
  out.lits.reserve(c.lits.size());
  for (auto& l : c.lits) out.lits.push_back(literal_substitute(l, s));
  return out;
}

int clause_compare(const Clause& a, const Clause& b) {
  if (a.lits.size() != b.lits.size())
    return a.lits.size() < b.lits.size() ? -1 : 1;
  for (size_t i = 0; i < a.lits.size(); ++i)
    if (int c = literal_compare(a.lits[i], b.lits[i])) return c;
  return 0;
}

bool clause_equal(const Clause& a, const Clause& b) {
  if (a.lits.size() != b.lits.size()) return false;
  auto sa = a.lits, sb = b.lits;
  auto lt = [](const Literal& x, const Literal& y) {
    return literal_compare(x, y) < 0;
  };
  std::sort(sa.begin(), sa.end(), lt);
  std::sort(sb.begin(), sb.end(), lt);
  for (size_t i = 0; i < sa.size(); ++i)
    if (!literal_equal(sa[i], sb[i])) return false;
  return true;
}

std::string clause_to_string(const Clause& c) {
  if (c.lits.empty()) return "<empty>";
  std::string s;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) s += " | ";
    s += literal_to_string(c.lits[i]);
  }
  return s;
}

std::vector<std::pair<std::string, TypePtr>> clause_free_vars(const Clause& c) {
  std::vector<std::pair<std::string, TypePtr>> out;
  for (auto& l : c.lits) {
    collect_free_vars(l.lhs, out);
    collect_free_vars(l.rhs, out);
  }
  return out;
}

std::vector<std::string> clause_type_vars(const Clause& c) {
  std::vector<std::string> out;
  for (auto& l : c.lits) {
    collect_term_type_vars(l.lhs, out);
    collect_term_type_vars(l.rhs, out);
  }
  return out;
}

Clause canonicalize_clause_vars(const Clause& c) {
  auto tvs = clause_type_vars(c);
  auto fvs = clause_free_vars(c);
  Subst s;
  for (size_t i = 0; i < tvs.size(); ++i)
    s.ty[tvs[i]] = ty_var("A" + std::to_string(i));
  for (size_t i = 0; i < fvs.size(); ++i)
    s.term[fvs[i].first] =
        mk_free("V" + std::to_string(i), apply_ty(s.ty, fvs[i].second));
  return clause_substitute(c, s);
}

bool clause_alpha_equal(const Clause& a, const Clause& b) {
  return clause_equal(canonicalize_clause_vars(a), canonicalize_clause_vars(b));
}

bool occurs_deep(const std::string& p, const Clause& c) {
  for (auto& l : c.lits) {
    auto v = predicate_literal_view(l);
    if (v && v->symbol == p) {
      for (auto& arg : v->args)
        if (symbol_occurs(p, arg)) return true;
    } else {
      if (symbol_occurs(p, l.lhs) || symbol_occurs(p, l.rhs)) return true;
    }
  }
  return false;
}

bool symbol_occurs_in_clause(const std::string& p, const Clause& c) {
  for (auto& l : c.lits)
    if (symbol_occurs(p, l.lhs) || symbol_occurs(p, l.rhs)) return true;
  return false;
}

int count_p_literals(const std::string& p, const Clause& c) {
  int n = 0;
  for (auto& l : c.lits) {
    auto v = predicate_literal_view(l);
    if (v && v->symbol == p) ++n;
  }
  return n;
}

bool occurs_deep_in_set(const std::string& p, const ClauseSet& n) {
  for (auto& c : n.clauses)
    if (occurs_deep(p, c)) return true;
  return false;
}

bool is_singular(const std::string& p, const ClauseSet& n) {
  for (auto& c : n.clauses)
    if (count_p_literals(p, c) > 1) return false;
  return !occurs_deep_in_set(p, n);
}

bool is_polymorphism_safe(const Clause& c, const std::string& p) {
  std::vector<std::string> cvars = clause_type_vars(c);
  for (auto& l : c.lits) {
    auto v = predicate_literal_view(l);
    if (!v || v->symbol != p) continue;
    std::vector<std::string> tvs;
    for (auto& ta : v->ty_args) collect_type_vars(ta, tvs);
    for (auto& cv : cvars)
      if (std::find(tvs.begin(), tvs.end(), cv) == tvs.end()) return false;
  }
  return true;
}

bool symbol_occurs_in_set(const std::string& p, const ClauseSet& n) {
  for (auto& c : n.clauses)
    if (symbol_occurs_in_clause(p, c)) return true;
  return false;
}

static TermPtr literal_to_formula(const Signature& sig, const Literal& l) {
  // Keep the predicate-literal abbreviation: t = true renders as t.
  TermPtr atom;
  if (is_sym(l.rhs, "true") && is_bool(l.lhs->ty))
    atom = l.lhs;
  else if (is_sym(l.lhs, "true") && is_bool(l.rhs->ty))
    atom = l.rhs;
  if (atom) return l.positive ? atom : mk_not(sig, atom);
  return l.positive ? mk_eqb(sig, l.lhs, l.rhs) : mk_neqb(sig, l.lhs, l.rhs);
}

TermPtr clause_to_formula(const Signature& sig, const Clause& c) {
  if (c.lits.empty()) return mk_false(sig);
  TermPtr f = literal_to_formula(sig, c.lits[0]);
  for (size_t i = 1; i < c.lits.size(); ++i)
    f = mk_or(sig, f, literal_to_formula(sig, c.lits[i]));
  return f;
}

static std::string fresh_name(const std::string& base,
                              const std::vector<std::string>& used) {
  std::string n = base;
  while (std::find(used.begin(), used.end(), n) != used.end()) n += "'";
  return n;
}

Clause rename_apart(const Clause& c, std::vector<std::string>& used_terms,
                    std::vector<std::string>& used_tys) {
  auto tvs = clause_type_vars(c);
  auto fvs = clause_free_vars(c);
  Subst s;
  for (auto& tv : tvs) {
    std::string n = fresh_name(tv, used_tys);
    used_tys.push_back(n);
    if (n != tv) s.ty[tv] = ty_var(n);
  }
  for (auto& [fv, ty] : fvs) {
    std::string n = fresh_name(fv, used_terms);
    used_terms.push_back(n);
    if (n != fv || !s.ty.empty())
      s.term[fv] = mk_free(n, apply_ty(s.ty, ty));
  }
  if (s.empty()) return c;
  return clause_substitute(c, s);
}

// Rendering of a literal with every variable name forgotten, used to fix
// literal and side order before the canonical renaming looks at names.
static std::string blind_literal(const Literal& l, bool* swap_sides) {
  Subst s;
  Clause one{{l}};
  for (auto& tv : clause_type_vars(one)) s.ty[tv] = ty_var("*");
  for (auto& [v, ty] : clause_free_vars(one))
    s.term[v] = mk_free("*", apply_ty(s.ty, ty));
  Literal b = literal_substitute(l, s);
  std::string ls = term_to_string(b.lhs), rs = term_to_string(b.rhs);
  *swap_sides = rs < ls;
  if (*swap_sides) std::swap(ls, rs);
  return (b.positive ? "+" : "-") + ls + " ~ " + rs;
}

bool clause_set_equal_upto_alpha(const std::vector<Clause>& a,
                                 const std::vector<Clause>& b) {
  if (a.size() != b.size()) return false;
  auto key = [](const Clause& c) {
    std::vector<std::pair<std::string, Literal>> items;
    for (auto& l : c.lits) {
      bool swap = false;
      std::string bs = blind_literal(l, &swap);
      items.push_back({bs, swap ? Literal{l.positive, l.rhs, l.lhs} : l});
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    Clause ordered;
    for (auto& [bs, l] : items) ordered.lits.push_back(l);
    Clause k = canonicalize_clause_vars(ordered);
    std::string s;
    for (auto& l : k.lits) s += literal_to_string(l) + ";";
    return s;
  };
  std::vector<std::string> ka, kb;
  for (auto& c : a) ka.push_back(key(c));
  for (auto& c : b) kb.push_back(key(c));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

}  // namespace hoprep
