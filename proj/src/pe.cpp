#include "hoprep/pe.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hoprep/cc.hpp"

namespace hoprep {

namespace {

// Positions of the p-literals of a clause.
std::vector<size_t> p_literal_positions(const Clause& c, const std::string& p) {
  std::vector<size_t> out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    auto v = predicate_literal_view(c.lits[i]);
    if (v && v->symbol == p) out.push_back(i);
  }
  return out;
}

// Atom of the form p<as> xs with distinct type variables and distinct term
// variables.
bool variable_form(const PLitView& v) {
  std::set<std::string> tys, vars;
  for (auto& ta : v.ty_args) {
    if (!ta->is_var) return false;
    if (!tys.insert(ta->name).second) return false;
  }
  for (auto& a : v.args) {
    if (a->kind != TermKind::FreeVar) return false;
    if (!vars.insert(a->name).second) return false;
  }
  return true;
}

// Replaces the free variable x by a bound variable at the given depth.
TermPtr close_over(const TermPtr& t, const std::string& x, int depth) {
  switch (t->kind) {
    case TermKind::FreeVar:
      if (t->name == x) return mk_bound(depth, t->ty);
      return t;
    case TermKind::App:
      return mk_app(close_over(t->f, x, depth), close_over(t->a, x, depth));
    case TermKind::Lam:
      return mk_lam(t->binder, close_over(t->f, x, depth + 1));
    default:
      return t;
  }
}

}  // namespace

GrowthMetrics growth_metrics(const ClauseSet& n) {
  GrowthMetrics m;
  m.clauses = static_cast<long long>(n.clauses.size());
  for (auto& c : n.clauses) {
    m.literals += static_cast<long long>(c.lits.size());
    long long v = static_cast<long long>(clause_free_vars(c).size());
    m.var_square_sum += v * v;
  }
  return m;
}

bool growth_check(const GrowthMetrics& before, const GrowthMetrics& after,
                  long long k_tol) {
  return after.literals - before.literals < k_tol ||
         after.var_square_sum < before.var_square_sum ||
         after.clauses - before.clauses < k_tol;
}

std::optional<Clause> flat_resolvent(const Signature& sig, const Clause& c,
                                     size_t lc, const Clause& d, size_t ld) {
  auto vc = predicate_literal_view(c.lits[lc]);
  auto vd = predicate_literal_view(d.lits[ld]);
  if (!vc || !vd || vc->symbol != vd->symbol) return std::nullopt;
  if (!vc->positive || vd->positive) return std::nullopt;
  if (vc->ty_args.size() != vd->ty_args.size() ||
      vc->args.size() != vd->args.size())
    return std::nullopt;
  auto u = unify_types(vc->ty_args, vd->ty_args);
  if (!u) return std::nullopt;
  Subst s;
  s.ty = *u;
  Clause out;
  for (size_t i = 0; i < vc->args.size(); ++i)
    out.lits.push_back(mk_literal(sig, false, substitute(vc->args[i], s),
                                  substitute(vd->args[i], s)));
  for (size_t i = 0; i < c.lits.size(); ++i)
    if (i != lc) out.lits.push_back(literal_substitute(c.lits[i], s));
  for (size_t i = 0; i < d.lits.size(); ++i)
    if (i != ld) out.lits.push_back(literal_substitute(d.lits[i], s));
  return out;
}

std::vector<Clause> resolved_set(const ClauseSet& m,
                                 const std::vector<Clause>& n,
                                 const std::string& p) {
  if (!is_singular(p, m))
    throw std::invalid_argument("resolved set needs p singular for M");
  std::vector<Clause> out;
  std::deque<Clause> work(n.begin(), n.end());
  while (!work.empty()) {
    Clause c = std::move(work.front());
    work.pop_front();
    auto ps = p_literal_positions(c, p);
    if (ps.empty()) {
      out.push_back(std::move(c));
      continue;
    }
    size_t li = ps.front();
    bool pos = predicate_literal_view(c.lits[li])->positive;
    for (auto& mc : m.clauses) {
      auto mps = p_literal_positions(mc, p);
      if (mps.empty()) continue;
      size_t mi = mps.front();
      if (predicate_literal_view(mc.lits[mi])->positive == pos) continue;
      std::vector<std::string> used_terms, used_tys;
      for (auto& [nm, ty] : clause_free_vars(c)) used_terms.push_back(nm);
      used_tys = clause_type_vars(c);
      Clause rc = rename_apart(mc, used_terms, used_tys);
      auto r = pos ? flat_resolvent(m.sig, c, li, rc, mi)
                   : flat_resolvent(m.sig, rc, mi, c, li);
      if (r) work.push_back(std::move(*r));
    }
  }
  return out;
}

std::optional<ClauseSet> spe(const ClauseSet& n, const std::string& p) {
  if (!is_singular(p, n)) return std::nullopt;
  for (auto& c : n.clauses)
    if (!is_polymorphism_safe(c, p)) return std::nullopt;
  ClauseSet pos, result;
  pos.sig = n.sig;
  result.sig = n.sig;
  std::vector<Clause> neg;
  for (auto& c : n.clauses) {
    auto ps = p_literal_positions(c, p);
    if (ps.empty())
      result.clauses.push_back(c);
    else if (predicate_literal_view(c.lits[ps.front()])->positive)
      pos.clauses.push_back(c);
    else
      neg.push_back(c);
  }
  for (auto& c : resolved_set(pos, neg, p)) result.clauses.push_back(c);
  result.sig.remove_symbol(p);
  return result;
}

std::optional<DefinitionSet> find_definition_set(const ClauseSet& n,
                                                 const std::string& p) {
  DefinitionSet g;
  g.p = p;
  std::vector<Clause> raw;
  for (size_t i = 0; i < n.clauses.size(); ++i) {
    auto ps = p_literal_positions(n.clauses[i], p);
    bool member = false;
    for (size_t li : ps) {
      auto v = predicate_literal_view(n.clauses[i].lits[li]);
      if (variable_form(*v)) member = true;
    }
    if (member) {
      g.indices.push_back(i);
      raw.push_back(n.clauses[i]);
    }
  }
  if (raw.empty()) return std::nullopt;

  // Condition 1: p singular for G.
  ClauseSet gset;
  gset.sig = n.sig;
  gset.clauses = raw;
  if (!is_singular(p, gset)) return std::nullopt;

  // Conditions 2-4 plus a shared canonical (alpha, x) renaming.
  std::optional<size_t> n_ty, n_tm;
  for (auto& c : raw) {
    size_t li = p_literal_positions(c, p).front();
    auto v = predicate_literal_view(c.lits[li]);
    if (!variable_form(*v)) return std::nullopt;
    if (n_ty && (*n_ty != v->ty_args.size() || *n_tm != v->args.size()))
      return std::nullopt;
    n_ty = v->ty_args.size();
    n_tm = v->args.size();
    std::set<std::string> atys, avars;
    for (auto& ta : v->ty_args) atys.insert(ta->name);
    for (auto& a : v->args) avars.insert(a->name);
    for (auto& tv : clause_type_vars(c))
      if (!atys.count(tv)) return std::nullopt;
    for (auto& [nm, ty] : clause_free_vars(c))
      if (!avars.count(nm)) return std::nullopt;
  }
  for (size_t i = 0; i < *n_ty; ++i) g.alpha.push_back("A" + std::to_string(i));
  for (auto& c : raw) {
    size_t li = p_literal_positions(c, p).front();
    auto v = predicate_literal_view(c.lits[li]);
    Subst s;
    for (size_t i = 0; i < v->ty_args.size(); ++i)
      s.ty[v->ty_args[i]->name] = ty_var(g.alpha[i]);
    for (size_t i = 0; i < v->args.size(); ++i)
      s.term[v->args[i]->name] =
          mk_free("X" + std::to_string(i), apply_ty(s.ty, v->args[i]->ty));
    g.clauses.push_back(clause_substitute(c, s));
  }
  {
    size_t li = p_literal_positions(g.clauses.front(), p).front();
    auto v = predicate_literal_view(g.clauses.front().lits[li]);
    for (auto& a : v->args) g.xs.emplace_back(a->name, a->ty);
  }

  // Condition 5: all flat resolvents within G are tautologies.
  ClauseSet gpos;
  gpos.sig = n.sig;
  std::vector<Clause> gneg;
  for (auto& c : g.clauses) {
    size_t li = p_literal_positions(c, p).front();
    if (predicate_literal_view(c.lits[li])->positive)
      gpos.clauses.push_back(c);
    else
      gneg.push_back(c);
  }
  for (auto& r : resolved_set(gpos, gneg, p))
    if (!cc_valid(r)) return std::nullopt;

  // The definition body, from the positive clauses in G order.
  TermPtr phi;
  for (auto& c : g.clauses) {
    size_t li = p_literal_positions(c, p).front();
    if (!predicate_literal_view(c.lits[li])->positive) continue;
    Clause rest;
    for (size_t i = 0; i < c.lits.size(); ++i)
      if (i != li) rest.lits.push_back(c.lits[i]);
    TermPtr d = mk_not(n.sig, clause_to_formula(n.sig, rest));
    phi = phi ? mk_or(n.sig, phi, d) : d;
  }
  if (!phi) phi = mk_false(n.sig);
  g.phi = phi;

  // Condition 6: the environment with fresh type constructors and constants
  // is unsatisfiable.
  Signature scratch = n.sig;
  Subst env;
  for (size_t i = 0; i < g.alpha.size(); ++i) {
    std::string iota = "I" + std::to_string(i);
    while (scratch.has_type_ctor(iota) || scratch.has_symbol(iota)) iota += "'";
    scratch.declare_type_ctor(iota, 0);
    env.ty[g.alpha[i]] = ty_ctor(iota);
  }
  std::vector<TermPtr> cs;
  for (size_t i = 0; i < g.xs.size(); ++i) {
    std::string cn = "c" + std::to_string(i);
    while (scratch.has_symbol(cn) || scratch.has_type_ctor(cn)) cn += "'";
    scratch.declare_symbol(cn, TypeScheme{{}, apply_ty(env.ty, g.xs[i].second)});
    env.term[g.xs[i].first] = mk_sym(scratch, cn);
  }
  ClauseSet e;
  e.sig = scratch;
  for (auto& c : g.clauses) {
    size_t li = p_literal_positions(c, p).front();
    Clause rest;
    for (size_t i = 0; i < c.lits.size(); ++i)
      if (i != li) rest.lits.push_back(c.lits[i]);
    e.clauses.push_back(clause_substitute(rest, env));
  }
  if (!cc_ground_unsat(e)) return std::nullopt;
  return g;
}

TermPtr associated_definition(const Signature& sig, const DefinitionSet& g) {
  std::vector<TypePtr> tys;
  for (auto& a : g.alpha) tys.push_back(ty_var(a));
  TermPtr atom = mk_sym(sig, g.p, tys);
  for (auto& [x, ty] : g.xs) atom = mk_app(atom, mk_free(x, ty));
  return mk_eqb(sig, atom, g.phi);
}

namespace {

// lambda xs. phi{alpha -> tys}
TermPtr definition_lambda(const DefinitionSet& g,
                          const std::vector<TypePtr>& tys) {
  TypeSubst m;
  for (size_t i = 0; i < g.alpha.size(); ++i) m[g.alpha[i]] = tys[i];
  Subst s;
  s.ty = m;
  TermPtr body = substitute(g.phi, s);
  for (size_t i = g.xs.size(); i-- > 0;) {
    TypePtr bty = apply_ty(m, g.xs[i].second);
    body = mk_lam(bty, close_over(body, g.xs[i].first, 0));
  }
  return body;
}

TermPtr expand_instances(const TermPtr& t, const DefinitionSet& g) {
  switch (t->kind) {
    case TermKind::Sym:
      if (t->name == g.p) return definition_lambda(g, t->ty_args);
      return t;
    case TermKind::App:
      return mk_app(expand_instances(t->f, g), expand_instances(t->a, g));
    case TermKind::Lam:
      return mk_lam(t->binder, expand_instances(t->f, g));
    default:
      return t;
  }
}

}  // namespace

ClauseSet dpe(const ClauseSet& n, const std::string& p, const DefinitionSet& g) {
  std::set<size_t> gidx(g.indices.begin(), g.indices.end());
  ClauseSet gset;
  gset.sig = n.sig;
  gset.clauses = g.clauses;
  std::vector<Clause> r, nbar;
  for (size_t i = 0; i < n.clauses.size(); ++i) {
    if (gidx.count(i)) continue;
    if (p_literal_positions(n.clauses[i], p).empty())
      nbar.push_back(n.clauses[i]);
    else
      r.push_back(n.clauses[i]);
  }
  ClauseSet result;
  result.sig = n.sig;
  result.clauses = nbar;
  for (auto& c : resolved_set(gset, r, p)) result.clauses.push_back(c);
  for (auto& c : result.clauses) {
    Clause replaced;
    for (auto& l : c.lits)
      replaced.lits.push_back(mk_literal(result.sig, l.positive,
                                         expand_instances(l.lhs, g),
                                         expand_instances(l.rhs, g)));
    c = std::move(replaced);
  }
  result.sig.remove_symbol(p);
  return result;
}

PpeOutcome ppe(const ClauseSet& n, const std::string& p, long long k_tol) {
  PpeOutcome out;
  if (auto g = find_definition_set(n, p)) {
    out.branch = PeBranch::Dpe;
    out.set = dpe(n, p, *g);
    return out;
  }
  if (auto s = spe(n, p)) {
    if (growth_check(growth_metrics(n), growth_metrics(*s), k_tol)) {
      out.branch = PeBranch::Spe;
      out.set = std::move(*s);
      return out;
    }
  }
  return out;
}

PeResult run_pe(const ClauseSet& n, PeMode mode, long long k_tol,
                int max_passes) {
  PeResult res;
  res.set = n;
  bool changed = true;
  while (changed && res.rounds < max_passes) {
    changed = false;
    ++res.rounds;
    for (auto& p : res.set.sig.predicate_symbols()) {
      if (!symbol_occurs_in_set(p, res.set)) continue;
      PpeOutcome out;
      switch (mode) {
        case PeMode::Portfolio:
          out = ppe(res.set, p, k_tol);
          break;
        case PeMode::SpeOnly: {
          if (auto s = spe(res.set, p)) {
            if (growth_check(growth_metrics(res.set), growth_metrics(*s),
                             k_tol)) {
              out.branch = PeBranch::Spe;
              out.set = std::move(*s);
            }
          }
          break;
        }
        case PeMode::DpeOnly: {
          if (auto g = find_definition_set(res.set, p)) {
            out.branch = PeBranch::Dpe;
            out.set = dpe(res.set, p, *g);
          }
          break;
        }
      }
      if (out.branch != PeBranch::NotApplicable) {
        res.set = std::move(out.set);
        res.eliminated.emplace_back(p, out.branch);
        changed = true;
        break;
      }
    }
  }
  return res;
}

}  // namespace hoprep
