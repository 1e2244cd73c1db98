#include "hoprep/qle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hoprep {

namespace {

std::vector<std::string> occurring_predicates(const ClauseSet& n) {
  std::vector<std::string> out;
  for (auto& p : n.sig.predicate_symbols())
    if (symbol_occurs_in_set(p, n)) out.push_back(p);
  return out;
}

// (symbol, polarity) of every predicate literal of the clause, in order.
std::vector<std::pair<std::string, bool>> pred_literals(const Clause& c) {
  std::vector<std::pair<std::string, bool>> out;
  for (auto& l : c.lits) {
    auto v = predicate_literal_view(l);
    if (v) out.emplace_back(v->symbol, l.positive);
  }
  return out;
}

QleEncoding encode_with_order(const ClauseSet& n,
                              std::vector<std::string> symbols) {
  QleEncoding e;
  e.symbols = std::move(symbols);
  e.problem.nvars = static_cast<int>(2 * e.symbols.size());
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < e.symbols.size(); ++i) index[e.symbols[i]] = i;

  auto var = [&](const std::string& p, bool positive) {
    size_t k = index.at(p);
    return positive ? e.pos_var(k) : e.neg_var(k);
  };

  std::set<std::vector<int>> seen;
  auto add = [&](std::vector<int> cl) {
    if (seen.insert(cl).second) e.problem.clauses.push_back(std::move(cl));
  };

  for (auto& c : n.clauses) {
    auto pls = pred_literals(c);
    // Family 1: a wrong-polarity literal forces another right-polarity one.
    for (size_t j = 0; j < pls.size(); ++j) {
      std::vector<int> cl;
      for (size_t i = 0; i < pls.size(); ++i) {
        if (i == j)
          cl.push_back(-var(pls[i].first, !pls[i].second));
        else
          cl.push_back(var(pls[i].first, pls[i].second));
      }
      add(std::move(cl));
    }
    // Family 2: a deep occurrence counted quasipure needs a right-polarity
    // literal in the clause.
    for (auto& p : e.symbols) {
      if (!occurs_deep(p, c)) continue;
      for (bool positive : {true, false}) {
        std::vector<int> cl{-var(p, positive)};
        for (auto& [q, s] : pls) cl.push_back(var(q, s));
        add(std::move(cl));
      }
    }
  }
  // Family 3: a single polarity per symbol.
  for (auto& p : e.symbols) add({-var(p, true), -var(p, false)});
  // Family 4: nontrivial solutions only.
  std::vector<int> any;
  for (auto& p : e.symbols) {
    any.push_back(var(p, true));
    any.push_back(var(p, false));
  }
  e.problem.clauses.push_back(std::move(any));
  return e;
}

std::optional<QuasipureResult> find_with_order(
    const ClauseSet& n, std::vector<std::string> symbols) {
  QleEncoding e = encode_with_order(n, std::move(symbols));
  if (e.symbols.empty()) return std::nullopt;
  auto a = solve(e.problem);
  if (!a) return std::nullopt;
  QuasipureResult res;
  for (auto& p : n.sig.predicate_symbols()) {
    auto it = std::find(e.symbols.begin(), e.symbols.end(), p);
    if (it == e.symbols.end()) continue;
    size_t k = static_cast<size_t>(it - e.symbols.begin());
    bool pos = a->value(e.pos_var(k));
    bool neg = a->value(e.neg_var(k));
    if (!pos && !neg) continue;  // prune symbols the assignment ignores
    res.p_set.push_back(p);
    res.m[p] = pos;
  }
  if (res.p_set.empty()) return std::nullopt;
  if (!is_quasipure(res.p_set, res.m, n))
    throw std::logic_error("encoding produced a non-quasipure witness");
  return res;
}

}  // namespace

bool is_quasipure(const std::vector<std::string>& p_set, const PolarityMap& m,
                  const ClauseSet& n) {
  for (auto& c : n.clauses) {
    bool touched = false;
    for (auto& p : p_set)
      if (symbol_occurs_in_clause(p, c)) {
        touched = true;
        break;
      }
    if (!touched) continue;
    bool ok = false;
    for (auto& [q, s] : pred_literals(c)) {
      auto it = m.find(q);
      if (it != m.end() &&
          std::find(p_set.begin(), p_set.end(), q) != p_set.end() &&
          it->second == s) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

QleEncoding encode_qle(const ClauseSet& n) {
  return encode_with_order(n, occurring_predicates(n));
}

std::optional<QuasipureResult> find_quasipure_set(const ClauseSet& n) {
  return find_with_order(n, occurring_predicates(n));
}

QleResult run_qle(const ClauseSet& n, unsigned var_order_seed) {
  QleResult res;
  res.set = n;
  for (;;) {
    std::vector<std::string> symbols = occurring_predicates(res.set);
    if (var_order_seed != 0) {
      std::mt19937 rng(var_order_seed + static_cast<unsigned>(res.rounds));
      std::shuffle(symbols.begin(), symbols.end(), rng);
    }
    auto w = find_with_order(res.set, symbols);
    if (!w) break;
    std::vector<Clause> kept;
    int deleted = 0;
    for (auto& c : res.set.clauses) {
      bool del = false;
      for (auto& [q, s] : pred_literals(c)) {
        auto it = w->m.find(q);
        if (it != w->m.end() && it->second == s) {
          del = true;
          break;
        }
      }
      if (del)
        ++deleted;
      else
        kept.push_back(c);
    }
    if (deleted == 0) break;
    res.set.clauses = std::move(kept);
    res.clauses_removed += deleted;
    ++res.rounds;
    res.witnesses.push_back(std::move(*w));
  }
  return res;
}

QleResult run_ple(const ClauseSet& n) {
  QleResult res;
  res.set = n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& p : occurring_predicates(res.set)) {
      if (occurs_deep_in_set(p, res.set)) continue;
      bool pos = false, neg = false;
      for (auto& c : res.set.clauses)
        for (auto& [q, s] : pred_literals(c))
          if (q == p) (s ? pos : neg) = true;
      if (pos == neg) continue;  // both polarities or no literal at all
      std::vector<Clause> kept;
      int deleted = 0;
      for (auto& c : res.set.clauses) {
        if (count_p_literals(p, c) > 0)
          ++deleted;
        else
          kept.push_back(c);
      }
      if (deleted == 0) continue;
      res.set.clauses = std::move(kept);
      res.clauses_removed += deleted;
      ++res.rounds;
      QuasipureResult w;
      w.p_set.push_back(p);
      w.m[p] = pos;
      res.witnesses.push_back(std::move(w));
      changed = true;
      break;
    }
  }
  return res;
}

}  // namespace hoprep
