#include "hoprep/bce.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hoprep/cc.hpp"
#include "hoprep/pe.hpp"

namespace hoprep {

std::optional<Clause> binary_flat_l_resolvent(const Signature& sig,
                                              const Clause& c, size_t lc,
                                              const Clause& d, size_t ld) {
  auto vc = predicate_literal_view(c.lits[lc]);
  auto vd = predicate_literal_view(d.lits[ld]);
  if (!vc || !vd || vc->symbol != vd->symbol ||
      vc->positive == vd->positive)
    return std::nullopt;
  return vc->positive ? flat_resolvent(sig, c, lc, d, ld)
                      : flat_resolvent(sig, d, ld, c, lc);
}

namespace {

// Polymorphism safety relative to one literal: every type variable of the
// clause occurs in the literal's type arguments.
bool literal_poly_safe(const Clause& c, const PLitView& v) {
  std::vector<std::string> tvs;
  for (auto& ta : v.ty_args) collect_type_vars(ta, tvs);
  for (auto& cv : clause_type_vars(c))
    if (std::find(tvs.begin(), tvs.end(), cv) == tvs.end()) return false;
  return true;
}

}  // namespace

bool is_blocked(const ClauseSet& n, size_t ci, size_t li,
                BlockednessCertificate* cert) {
  const Clause& c = n.clauses[ci];
  auto v = predicate_literal_view(c.lits[li]);
  if (!v) throw std::invalid_argument("blocking literal must be a p-literal");
  const std::string& p = v->symbol;

  if (!literal_poly_safe(c, *v)) return false;
  if (occurs_deep_in_set(p, n)) return false;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i == li) continue;
    auto w = predicate_literal_view(c.lits[i]);
    if (w && w->symbol == p && w->positive == v->positive) return false;
  }

  BlockednessCertificate out;
  out.clause_index = ci;
  out.blocking = c.lits[li];
  for (size_t di = 0; di < n.clauses.size(); ++di) {
    if (di == ci) continue;
    std::vector<std::string> used_terms, used_tys;
    for (auto& [nm, ty] : clause_free_vars(c)) used_terms.push_back(nm);
    used_tys = clause_type_vars(c);
    Clause d = rename_apart(n.clauses[di], used_terms, used_tys);
    for (size_t mi = 0; mi < d.lits.size(); ++mi) {
      auto w = predicate_literal_view(d.lits[mi]);
      if (!w || w->symbol != p || w->positive == v->positive) continue;
      auto r = binary_flat_l_resolvent(n.sig, c, li, d, mi);
      if (!r) continue;
      if (!cc_valid(*r)) return false;
      out.partners.push_back({di, *r});
    }
  }
  if (cert) *cert = std::move(out);
  return true;
}

BceResult run_bce(const ClauseSet& n, unsigned order_seed) {
  BceResult res;
  std::vector<bool> removed(n.clauses.size(), false);
  std::vector<size_t> order(n.clauses.size());
  std::iota(order.begin(), order.end(), 0);
  if (order_seed != 0) {
    std::mt19937 rng(order_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Frozen snapshot of the active clauses for this pass.
    std::vector<size_t> active;
    for (size_t i = 0; i < n.clauses.size(); ++i)
      if (!removed[i]) active.push_back(i);
    ClauseSet snap;
    snap.sig = n.sig;
    for (size_t i : active) snap.clauses.push_back(n.clauses[i]);

    for (size_t oi : order) {
      if (removed[oi]) continue;
      size_t pos = static_cast<size_t>(
          std::find(active.begin(), active.end(), oi) - active.begin());
      const Clause& c = n.clauses[oi];
      for (size_t li = 0; li < c.lits.size(); ++li) {
        if (!predicate_literal_view(c.lits[li])) continue;
        BlockednessCertificate cert;
        if (is_blocked(snap, pos, li, &cert)) {
          cert.clause_index = oi;
          for (auto& pr : cert.partners) pr.partner_index = active[pr.partner_index];
          res.certificates.push_back(std::move(cert));
          removed[oi] = true;
          ++res.clauses_removed;
          changed = true;
          break;
        }
      }
      if (changed) break;  // rebuild the snapshot after each removal
    }
  }

  res.set.sig = n.sig;
  for (size_t i = 0; i < n.clauses.size(); ++i)
    if (!removed[i]) res.set.clauses.push_back(n.clauses[i]);
  return res;
}

}  // namespace hoprep
