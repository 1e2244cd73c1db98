#include "hoprep/hlbe.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hoprep/cc.hpp"

namespace hoprep {

namespace {

// One-way matching on types: variables of `pattern` may be bound, names in
// `target` are constants.
bool match_types(const TypePtr& pattern, const TypePtr& target, TypeSubst& s) {
  if (pattern->is_var) {
    auto it = s.find(pattern->name);
    if (it != s.end()) return type_equal(it->second, target);
    s[pattern->name] = target;
    return true;
  }
  if (target->is_var || pattern->name != target->name ||
      pattern->args.size() != target->args.size())
    return false;
  for (size_t i = 0; i < pattern->args.size(); ++i)
    if (!match_types(pattern->args[i], target->args[i], s)) return false;
  return true;
}

// head_pos: the pattern term sits in function position of an application.
bool match_terms(const TermPtr& p, const TermPtr& t, bool head_pos, Subst& s) {
  switch (p->kind) {
    case TermKind::FreeVar: {
      if (head_pos) {
        // An applied variable head only matches the identical head.
        return t->kind == TermKind::FreeVar && t->name == p->name &&
               match_types(p->ty, t->ty, s.ty);
      }
      auto it = s.term.find(p->name);
      if (it != s.term.end()) return term_equal(it->second, t);
      if (has_loose_bound(t)) return false;
      if (!match_types(p->ty, t->ty, s.ty)) return false;
      s.term[p->name] = t;
      return true;
    }
    case TermKind::Bound:
      return t->kind == TermKind::Bound && t->index == p->index;
    case TermKind::Sym: {
      if (t->kind != TermKind::Sym || t->name != p->name ||
          t->ty_args.size() != p->ty_args.size())
        return false;
      for (size_t i = 0; i < p->ty_args.size(); ++i)
        if (!match_types(p->ty_args[i], t->ty_args[i], s.ty)) return false;
      return true;
    }
    case TermKind::App:
      return t->kind == TermKind::App && match_terms(p->f, t->f, true, s) &&
             match_terms(p->a, t->a, false, s);
    case TermKind::Lam:
      return t->kind == TermKind::Lam && match_types(p->binder, t->binder, s.ty) &&
             match_terms(p->f, t->f, false, s);
  }
  return false;
}

std::string literal_key(const Literal& l) {
  Clause c;
  c.lits.push_back(l);
  return literal_to_string(canonicalize_clause_vars(c).lits[0]);
}

bool literal_ground(const Literal& l) {
  std::vector<std::pair<std::string, TypePtr>> fvs;
  collect_free_vars(l.lhs, fvs);
  collect_free_vars(l.rhs, fvs);
  return fvs.empty();
}

bool contains_literal(const std::vector<Literal>& lits, const Literal& l) {
  for (auto& x : lits)
    if (literal_equal(x, l)) return true;
  return false;
}

ClauseSet without_clause(const ClauseSet& n, size_t idx) {
  ClauseSet out;
  out.sig = n.sig;
  for (size_t i = 0; i < n.clauses.size(); ++i)
    if (i != idx) out.clauses.push_back(n.clauses[i]);
  return out;
}

}  // namespace

std::optional<Subst> approx_match(const TermPtr& pattern, const TermPtr& target) {
  Subst s;
  if (!match_terms(pattern, target, false, s)) return std::nullopt;
  if (!term_equal(substitute(pattern, s), target)) return std::nullopt;
  return s;
}

std::optional<Subst> approx_match_literal(const Literal& pattern,
                                          const Literal& target) {
  if (pattern.positive != target.positive) return std::nullopt;
  {
    Subst s;
    if (match_terms(pattern.lhs, target.lhs, false, s) &&
        match_terms(pattern.rhs, target.rhs, false, s) &&
        term_equal(substitute(pattern.lhs, s), target.lhs) &&
        term_equal(substitute(pattern.rhs, s), target.rhs))
      return s;
  }
  Subst s;
  if (match_terms(pattern.lhs, target.rhs, false, s) &&
      match_terms(pattern.rhs, target.lhs, false, s) &&
      term_equal(substitute(pattern.lhs, s), target.rhs) &&
      term_equal(substitute(pattern.rhs, s), target.lhs))
    return s;
  return std::nullopt;
}

std::vector<Literal> hidden_literals(const Literal& l, const ClauseSet& n,
                                     int depth) {
  constexpr size_t kCap = 512;
  std::vector<Literal> hl;
  std::vector<Literal> frontier{l};
  std::set<std::string> seen{literal_key(l)};
  std::vector<std::string> used_terms, used_tys;
  {
    std::vector<std::pair<std::string, TypePtr>> fvs;
    collect_free_vars(l.lhs, fvs);
    collect_free_vars(l.rhs, fvs);
    for (auto& [nm, ty] : fvs) used_terms.push_back(nm);
    Clause c;
    c.lits.push_back(l);
    used_tys = clause_type_vars(c);
  }

  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<Literal> next;
    for (auto& target : frontier) {
      for (auto& c : n.clauses) {
        if (c.lits.size() != 2) continue;
        for (int orient = 0; orient < 2; ++orient) {
          Clause rc = rename_apart(c, used_terms, used_tys);
          const Literal& l1 = rc.lits[static_cast<size_t>(orient)];
          const Literal& l2 = rc.lits[static_cast<size_t>(1 - orient)];
          auto s = approx_match_literal(l2, target);
          if (!s) continue;
          Literal cand = complement(literal_substitute(l1, *s));
          std::string key = literal_key(cand);
          if (!seen.insert(key).second) continue;
          hl.push_back(cand);
          next.push_back(cand);
          if (hl.size() >= kCap) return hl;
        }
      }
    }
    frontier = std::move(next);
  }
  return hl;
}

HlbeResult hlbe_simplify(const ClauseSet& n, int depth) {
  HlbeResult res;
  res.set = n;
  std::set<std::string> states;

  auto state_key = [](const ClauseSet& s) {
    std::vector<std::string> keys;
    for (auto& c : s.clauses)
      keys.push_back(clause_to_string(canonicalize_clause_vars(c)));
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (auto& k : keys) out += k + "\n";
    return out;
  };

  bool changed = true;
  while (changed && res.rounds < 64) {
    if (!states.insert(state_key(res.set)).second) break;
    changed = false;
    ++res.rounds;

    // Hidden literal elimination: drop a literal implied towards a sibling.
    for (size_t ci = 0; ci < res.set.clauses.size(); ++ci) {
      Clause& c = res.set.clauses[ci];
      if (c.lits.size() < 2) continue;
      ClauseSet rest = without_clause(res.set, ci);
      bool local = true;
      while (local && c.lits.size() >= 2) {
        local = false;
        for (size_t keep = 0; keep < c.lits.size() && !local; ++keep) {
          auto hl = hidden_literals(c.lits[keep], rest, depth);
          for (size_t drop = 0; drop < c.lits.size(); ++drop) {
            if (drop == keep) continue;
            if (contains_literal(hl, c.lits[drop])) {
              c.lits.erase(c.lits.begin() + static_cast<long>(drop));
              ++res.literals_removed;
              changed = local = true;
              break;
            }
          }
        }
      }
    }

    // Hidden tautology elimination: delete a clause whose hidden extension
    // is valid.
    for (size_t ci = 0; ci < res.set.clauses.size();) {
      ClauseSet rest = without_clause(res.set, ci);
      Clause ext = res.set.clauses[ci];
      for (auto& l : res.set.clauses[ci].lits)
        for (auto& h : hidden_literals(l, rest, depth)) ext.lits.push_back(h);
      bool taut = false;
      for (size_t i = 0; i < ext.lits.size() && !taut; ++i)
        for (size_t j = i + 1; j < ext.lits.size(); ++j)
          if (literal_equal(ext.lits[i], complement(ext.lits[j]))) {
            taut = true;
            break;
          }
      if (!taut) taut = cc_valid(ext);
      if (taut) {
        res.set.clauses.erase(res.set.clauses.begin() + static_cast<long>(ci));
        ++res.clauses_removed;
        changed = true;
      } else {
        ++ci;
      }
    }

    // Failed literal elimination, ground literals only: complementary
    // hidden literals force the unit L.
    for (size_t ci = 0; ci < res.set.clauses.size() && !changed; ++ci) {
      for (auto& l : res.set.clauses[ci].lits) {
        if (!literal_ground(l)) continue;
        auto hl = hidden_literals(l, res.set, depth);
        bool failed = false;
        for (auto& h : hl)
          if (literal_ground(h) && contains_literal(hl, complement(h))) {
            failed = true;
            break;
          }
        if (!failed) continue;
        Literal unit = l;
        // Skip when the rewrite would only re-create an existing unit.
        int kept_units = 0, deleted = 0, stripped = 0;
        for (auto& d : res.set.clauses) {
          if (contains_literal(d.lits, unit)) {
            ++deleted;
            if (d.lits.size() == 1) ++kept_units;
          } else if (contains_literal(d.lits, complement(unit))) {
            ++stripped;
          }
        }
        if (deleted == kept_units && kept_units == 1 && stripped == 0) continue;

        std::vector<Clause> out;
        for (auto& d : res.set.clauses) {
          if (contains_literal(d.lits, unit)) {
            ++res.clauses_removed;
            continue;
          }
          Clause kept = d;
          auto& ls = kept.lits;
          size_t before = ls.size();
          ls.erase(std::remove_if(ls.begin(), ls.end(),
                                  [&](const Literal& x) {
                                    return literal_equal(x, complement(unit));
                                  }),
                   ls.end());
          res.literals_removed += static_cast<int>(before - ls.size());
          out.push_back(std::move(kept));
        }
        Clause uc;
        uc.lits.push_back(unit);
        out.push_back(std::move(uc));
        res.set.clauses = std::move(out);
        res.derived_units.push_back(unit);
        changed = true;
        break;
      }
    }
  }
  return res;
}

}  // namespace hoprep
