#include "hoprep/modelcheck.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hoprep/sat.hpp"

namespace hoprep {

namespace {

struct TermLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const {
    return term_compare(a, b) < 0;
  }
};

bool is_base(const TypePtr& t) {
  return !t->is_var && !is_bool(t) && !is_fun(t);
}

// Atoms of the propositional fragment: ground, non-logical head, no lambdas,
// no logical symbols, no Boolean proper subterms.
void check_prop_atom(const TermPtr& t, bool whole) {
  if (!whole && is_bool(t->ty))
    throw FragmentUnsupported("Boolean proper subterm in atom");
  switch (t->kind) {
    case TermKind::FreeVar:
      throw FragmentUnsupported("free variable in ground atom");
    case TermKind::Lam:
      throw FragmentUnsupported("lambda in ground atom");
    case TermKind::Bound:
      throw FragmentUnsupported("loose bound variable");
    case TermKind::Sym:
      if (Signature::is_logical(t->name))
        throw FragmentUnsupported("logical symbol in atom: " + t->name);
      return;
    case TermKind::App:
      check_prop_atom(t->f, false);
      check_prop_atom(t->a, false);
      return;
  }
}

}  // namespace

bool ground_prop_sat(const ClauseSet& n) {
  std::map<TermPtr, int, TermLess> atom_var;
  SatProblem p;
  for (auto& c : n.clauses) {
    std::vector<int> sc;
    for (auto& l : c.lits) {
      auto v = predicate_literal_view(l);
      if (!v) throw FragmentUnsupported("literal is not a predicate literal");
      check_prop_atom(v->atom, true);
      auto [it, fresh] = atom_var.emplace(v->atom, p.nvars + 1);
      if (fresh) ++p.nvars;
      sc.push_back(l.positive ? it->second : -it->second);
    }
    p.clauses.push_back(std::move(sc));
  }
  if (p.nvars > 24) throw FragmentUnsupported("more than 24 distinct atoms");
  return solve(p).has_value();
}

namespace {

// One symbol instance of the first-order fragment.
struct FOSyms {
  std::vector<std::string> consts;  // base-typed nullary symbols, sorted
  std::vector<std::string> fns;     // unary base-to-base symbols, sorted
  std::map<std::string, TypePtr> const_ty;
  std::map<std::string, std::pair<TypePtr, TypePtr>> fn_ty;
};

void scan_fo_term(const TermPtr& t, FOSyms& syms) {
  switch (t->kind) {
    case TermKind::FreeVar:
      throw FragmentUnsupported("free variable in ground term");
    case TermKind::Lam:
      throw FragmentUnsupported("lambda in first-order term");
    case TermKind::Bound:
      throw FragmentUnsupported("loose bound variable");
    case TermKind::Sym: {
      if (Signature::is_logical(t->name))
        throw FragmentUnsupported("logical symbol in first-order term");
      if (!t->ty_args.empty())
        throw FragmentUnsupported("polymorphic symbol instance");
      if (is_base(t->ty)) {
        if (!syms.const_ty.count(t->name)) {
          syms.const_ty[t->name] = t->ty;
          syms.consts.push_back(t->name);
        }
        return;
      }
      if (is_fun(t->ty) && is_base(t->ty->args[0]) && is_base(t->ty->args[1])) {
        if (!syms.fn_ty.count(t->name)) {
          syms.fn_ty[t->name] = {t->ty->args[0], t->ty->args[1]};
          syms.fns.push_back(t->name);
        }
        return;
      }
      throw FragmentUnsupported("symbol outside the first-order fragment: " +
                                t->name);
    }
    case TermKind::App: {
      TermPtr head = spine_head(t);
      auto args = spine_args(t);
      if (head->kind != TermKind::Sym || args.size() != 1)
        throw FragmentUnsupported("non-unary application in first-order term");
      scan_fo_term(head, syms);
      if (!is_base(args[0]->ty))
        throw FragmentUnsupported("function argument is not base-typed");
      scan_fo_term(args[0], syms);
      return;
    }
  }
}

struct Interp {
  int size;
  std::map<std::string, int> const_val;
  std::map<std::string, std::vector<int>> fn_table;
};

int eval_term(const TermPtr& t, const Interp& in) {
  if (t->kind == TermKind::Sym) return in.const_val.at(t->name);
  TermPtr head = spine_head(t);
  int arg = eval_term(spine_args(t)[0], in);
  return in.fn_table.at(head->name)[static_cast<size_t>(arg)];
}

}  // namespace

std::optional<int> finite_model_sat(const ClauseSet& n, int max_domain) {
  if (max_domain < 1 || max_domain > 3)
    throw FragmentUnsupported("max_domain must be in 1..3");

  // Classify every literal and collect the term vocabulary.
  FOSyms syms;
  struct PredAtom {
    std::string pred;
    std::vector<TermPtr> args;
  };
  struct LitShape {
    bool positive;
    std::optional<PredAtom> pred;  // else an equation lhs/rhs
    TermPtr lhs, rhs;
  };
  std::vector<std::vector<LitShape>> shapes;
  std::map<std::string, size_t> pred_arity;
  for (auto& c : n.clauses) {
    std::vector<LitShape> sc;
    for (auto& l : c.lits) {
      auto v = predicate_literal_view(l);
      if (v) {
        for (auto& a : v->args) {
          if (!is_base(a->ty))
            throw FragmentUnsupported("predicate argument is not base-typed");
          scan_fo_term(a, syms);
        }
        if (!v->ty_args.empty())
          throw FragmentUnsupported("polymorphic predicate instance");
        auto [it, fresh] = pred_arity.emplace(v->symbol, v->args.size());
        if (!fresh && it->second != v->args.size())
          throw FragmentUnsupported("predicate used at two arities");
        sc.push_back({l.positive, PredAtom{v->symbol, v->args}, nullptr, nullptr});
      } else {
        if (!is_base(l.lhs->ty))
          throw FragmentUnsupported("equation outside the first-order fragment");
        scan_fo_term(l.lhs, syms);
        scan_fo_term(l.rhs, syms);
        sc.push_back({l.positive, std::nullopt, l.lhs, l.rhs});
      }
    }
    shapes.push_back(std::move(sc));
  }

  std::map<std::string, int> consts_per_ty, fns_per_ty;
  for (auto& [c, ty] : syms.const_ty) ++consts_per_ty[ty->name];
  for (auto& [f, tys] : syms.fn_ty) ++fns_per_ty[tys.first->name];
  for (auto& [ty, k] : consts_per_ty)
    if (k > 3) throw FragmentUnsupported("more than 3 constants of type " + ty);
  for (auto& [ty, k] : fns_per_ty)
    if (k > 2) throw FragmentUnsupported("more than 2 functions on type " + ty);

  for (int size = 1; size <= max_domain; ++size) {
    // Mixed-radix enumeration: one digit per constant, `size` digits per
    // function table, all in sorted symbol order.
    size_t slots = syms.consts.size() +
                   syms.fns.size() * static_cast<size_t>(size);
    std::vector<int> digits(slots, 0);
    for (;;) {
      Interp in;
      in.size = size;
      size_t d = 0;
      for (auto& c : syms.consts) in.const_val[c] = digits[d++];
      for (auto& f : syms.fns) {
        std::vector<int> table;
        for (int i = 0; i < size; ++i) table.push_back(digits[d++]);
        in.fn_table[f] = std::move(table);
      }

      // Predicate truth values stay free: one SAT variable per ground cell.
      std::map<std::string, int> cell_var;
      SatProblem p;
      bool feasible = true;
      for (auto& sc : shapes) {
        std::vector<int> out;
        bool sat = false;
        for (auto& l : sc) {
          if (l.pred) {
            std::string key = l.pred->pred;
            for (auto& a : l.pred->args)
              key += "," + std::to_string(eval_term(a, in));
            auto [it, fresh] = cell_var.emplace(key, p.nvars + 1);
            if (fresh) ++p.nvars;
            out.push_back(l.positive ? it->second : -it->second);
          } else {
            bool eq = eval_term(l.lhs, in) == eval_term(l.rhs, in);
            if (eq == l.positive) {
              sat = true;
              break;
            }
          }
        }
        if (sat) continue;
        if (out.empty()) {
          feasible = false;
          break;
        }
        p.clauses.push_back(std::move(out));
      }
      if (feasible && solve(p).has_value()) return size;

      // Next interpretation.
      size_t i = 0;
      while (i < slots) {
        if (++digits[i] < size) break;
        digits[i++] = 0;
      }
      if (i == slots) break;
    }
  }
  return std::nullopt;
}

}  // namespace hoprep
