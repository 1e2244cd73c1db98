#include "hoprep/cc.hpp"

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

// Union-find plus binary application nodes; congruence closes by fixpoint.
struct CCContext {
  std::vector<int> parent;
  struct AppNode {
    int fun, arg, self;
  };
  std::vector<AppNode> apps;
  std::map<std::string, int> consts;            // frozen vars, symbols
  std::map<TermPtr, int, TermLess> opaque;      // lambdas, quantified terms
  std::map<std::pair<int, int>, int> app_memo;  // hash-consed apply nodes
  std::vector<std::pair<int, int>> diseqs;

  int fresh() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  }

  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }

  void merge(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }

  int const_node(const std::string& key) {
    auto it = consts.find(key);
    if (it != consts.end()) return it->second;
    int id = fresh();
    consts.emplace(key, id);
    return id;
  }

  int apply_node(int f, int a) {
    auto it = app_memo.find({f, a});
    if (it != app_memo.end()) return it->second;
    int id = fresh();
    app_memo.emplace(std::make_pair(f, a), id);
    apps.push_back({f, a, id});
    return id;
  }

  bool is_opaque_head(const TermPtr& head) {
    return head->kind == TermKind::Sym &&
           (head->name == "all" || head->name == "ex");
  }

  int intern(const TermPtr& t) {
    switch (t->kind) {
      case TermKind::FreeVar:
        return const_node("v:" + t->name);
      case TermKind::Sym: {
        std::string key = "s:" + t->name;
        for (auto& ta : t->ty_args) key += "<" + type_to_string(ta) + ">";
        return const_node(key);
      }
      case TermKind::Lam:
        break;
      case TermKind::App: {
        if (is_opaque_head(spine_head(t))) break;
        return apply_node(intern(t->f), intern(t->a));
      }
      case TermKind::Bound:
        // Loose indices only occur under an opaque lambda, never here.
        return const_node("b:" + std::to_string(t->index));
    }
    auto it = opaque.find(t);
    if (it != opaque.end()) return it->second;
    int id = fresh();
    opaque.emplace(t, id);
    return id;
  }

  void close() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < apps.size(); ++i)
        for (size_t j = i + 1; j < apps.size(); ++j) {
          if (find(apps[i].self) == find(apps[j].self)) continue;
          if (find(apps[i].fun) == find(apps[j].fun) &&
              find(apps[i].arg) == find(apps[j].arg)) {
            merge(apps[i].self, apps[j].self);
            changed = true;
          }
        }
    }
  }

  bool contradiction() {
    close();
    for (auto& [a, b] : diseqs)
      if (find(a) == find(b)) return true;
    return false;
  }
};

}  // namespace

bool cc_valid(const Clause& c) {
  CCContext ctx;
  // The complement of the clause plus top != bottom.
  ctx.diseqs.emplace_back(ctx.const_node("s:true"), ctx.const_node("s:false"));
  for (auto& l : c.lits) {
    int a = ctx.intern(l.lhs);
    int b = ctx.intern(l.rhs);
    if (l.positive)
      ctx.diseqs.emplace_back(a, b);
    else
      ctx.merge(a, b);
  }
  return ctx.contradiction();
}

bool cc_ground_unsat(const ClauseSet& n) {
  std::map<std::string, int> atom_var;
  SatProblem p;
  for (auto& c : n.clauses) {
    std::vector<int> sc;
    for (auto& l : c.lits) {
      const TermPtr& lo = term_compare(l.lhs, l.rhs) <= 0 ? l.lhs : l.rhs;
      const TermPtr& hi = term_compare(l.lhs, l.rhs) <= 0 ? l.rhs : l.lhs;
      std::string key = term_to_string(lo) + "=" + term_to_string(hi);
      auto [it, fresh] = atom_var.emplace(key, p.nvars + 1);
      if (fresh) ++p.nvars;
      sc.push_back(l.positive ? it->second : -it->second);
    }
    p.clauses.push_back(std::move(sc));
  }
  return !solve(p).has_value();
}

}  // namespace hoprep
