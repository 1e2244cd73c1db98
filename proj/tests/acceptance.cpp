// End-to-end acceptance checks: golden transformations, equisatisfiability
// fuzzing, elimination completeness, confluence, subsumption, encoder
// coherence, determinism, and the growth guard. One verdict line per check.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "common.hpp"
#include "fuzz_common.hpp"
#include "hoprep/bce.hpp"
#include "hoprep/cc.hpp"
#include "hoprep/hlbe.hpp"
#include "hoprep/modelcheck.hpp"
#include "hoprep/pe.hpp"
#include "hoprep/pipeline.hpp"
#include "hoprep/qle.hpp"

using namespace hoprep;
using hoprep::test::clause1;
using hoprep::test::gen_fo_set;
using hoprep::test::gen_prop_set;
using hoprep::test::parse_with_prelude;

namespace {

int failures = 0;

void verdict(const char* name, bool ok, const std::string& detail) {
  std::printf("%s  %s (%s)\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  if (!ok) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

ClauseSet choice_set() {
  return parse_problem(
      "(type i 0)\n(sym a i)\n(sym p (-> i o))\n(sym q (-> i o))\n"
      "(clause (vars (y (-> i o)) (z i)) (neg (app y z)) "
      "(pos (app y (app (inst choice i) y))))\n"
      "(clause (vars) (pos (app q a)))\n"
      "(clause (vars) (neg (app q (app (inst choice i) q))))\n"
      "(clause (vars) (pos (app p a)))\n"
      "(clause (vars (z i)) (neg (app p z)) (eq z a))");
}

ClauseSet ple_set() {
  return parse_problem(
      "(type i 0)\n(sym a i)\n(sym f (-> i i))\n(sym p (-> i o))\n"
      "(sym q (-> i i o))\n"
      "(clause (vars (x i)) (pos (app p x)) (pos (app q a x)))\n"
      "(clause (vars (x i)) (pos (app p (app f x))))\n"
      "(clause (vars) (neg (app q a a)))");
}

ClauseSet chain_set() {
  return parse_problem(
      "(type i 0)\n(sym a i)\n(sym f (-> i i))\n(sym p (-> i o))\n"
      "(clause (vars) (pos (app p a)))\n"
      "(clause (vars (x i)) (neg (app p x)) (pos (app p (app f x))))");
}

ClauseSet deep_pair_set() {
  return parse_problem(
      "(type i 0)\n(sym a i)\n(sym b i)\n(sym f (-> i i))\n"
      "(sym h (-> (-> i o) o i))\n(sym p (-> i o))\n(sym q (-> i o))\n"
      "(clause (vars) (pos (app p a)))\n"
      "(clause (vars (x i)) (pos (app q x)) (pos (app p (app f x))))\n"
      "(clause (vars) (neg (app q (app f a))))\n"
      "(clause (vars (x i)) (neg (app p x)) "
      "(neg (app q (app h p (app p b)))))");
}

bool golden_examples(std::string& detail) {
  int bad = 0, idx = 0;
  std::string failed;
  auto expect = [&](bool ok) {
    ++idx;
    if (!ok) {
      ++bad;
      failed += (failed.empty() ? "" : ",") + std::to_string(idx);
    }
  };

  // Choice problem: both p-clauses blocked, the rest kept.
  BceResult bce = run_bce(choice_set());
  expect(bce.clauses_removed == 2 && bce.set.clauses.size() == 3 &&
         !symbol_occurs_in_set("p", bce.set));

  // Hidden literal elimination collapses a chained ternary clause.
  {
    ClauseSet n = parse_with_prelude(
        "(clause (vars) (pos pa) (pos pb) (pos pc))\n"
        "(clause (vars) (neg pa) (pos pc))\n"
        "(clause (vars) (neg pb) (pos pc))");
    HlbeResult r = hlbe_simplify(n, 8);
    bool unit = false;
    for (auto& c : r.set.clauses)
      if (c.lits.size() == 1 &&
          literal_equal(c.lits[0],
                        clause1("(clause (vars) (pos pc))").lits[0]))
        unit = true;
    expect(unit && r.literals_removed >= 2);
  }

  // Flat resolvent with compound arguments on the negative side.
  {
    ClauseSet n = parse_with_prelude(
        "(clause (vars (z i)) (pos (app (app p2 z) z)) (pos (app q z)))\n"
        "(clause (vars (y (-> i i))) (neg (app (app p2 (app f (app y a))) "
        "(app y (app f a)))))");
    auto res = flat_resolvent(n.sig, n.clauses[0], 0, n.clauses[1], 0);
    Clause want = parse_with_prelude(
                      "(clause (vars (z i) (y (-> i i))) "
                      "(neq (app f (app y a)) z) (neq (app y (app f a)) z) "
                      "(pos (app q z)))")
                      .clauses[0];
    expect(res && clause_set_equal_upto_alpha({*res}, {want}));
  }

  // Singular elimination goldens.
  {
    ClauseSet n = parse_with_prelude(
        "(clause (vars (z i)) (pos (app p (app f z))) (pos (app q z)))\n"
        "(clause (vars) (neg (app p (app f a))))");
    auto out = spe(n, "p");
    Clause want = clause1(
        "(clause (vars (z i)) (neq (app f a) (app f z)) (pos (app q z)))");
    expect(out && clause_set_equal_upto_alpha(out->clauses, {want}));
  }
  {
    ClauseSet n = parse_with_prelude(
        "(clause (vars (y (-> i o))) (neg (app y a)))\n"
        "(clause (vars) (pos (app p a)))");
    auto out = spe(n, "p");
    expect(out && clause_set_equal_upto_alpha(
                      out->clauses,
                      {clause1("(clause (vars (y (-> i o))) (neg (app y a)))")}));
  }

  // Definition set for p2 defined as q and r on the two arguments.
  {
    ClauseSet n = parse_with_prelude(
        "(clause (vars (x i) (y i)) (neg (app (app p2 x) y)) (pos (app q x)) "
        "(pos (app r y)))\n"
        "(clause (vars (x i) (y i)) (pos (app (app p2 x) y)) "
        "(neg (app q x)))\n"
        "(clause (vars (x i) (y i)) (pos (app (app p2 x) y)) "
        "(neg (app r y)))");
    auto g = find_definition_set(n, "p2");
    expect(g && g->indices.size() == 3 &&
           term_to_string(associated_definition(n.sig, *g)) ==
               "eqb<o> (p2 X0 X1) (or (not (not (q X0))) (not (not (r X1))))");
  }

  // Blockedness verdicts.
  {
    ClauseSet n = parse_with_prelude(
        "(clause (vars) (neg pa) (pos pb))\n"
        "(clause (vars) (pos pa) (neg pb))\n"
        "(clause (vars) (neg pb) (pos pc))");
    expect(is_blocked(n, 0, 0));
  }
  {
    ClauseSet n = parse_with_prelude(
        "(clause (vars (x i) (y i)) (pos (app (app p2 x) y)) "
        "(pos (app (app p2 y) x)))\n"
        "(clause (vars (x i) (y i)) (neg (app (app p2 x) y)) "
        "(neg (app (app p2 y) x)))");
    expect(!is_blocked(n, 0, 0) && !is_blocked(n, 0, 1));
  }
  {
    ClauseSet n = parse_with_prelude(
        "(clause (vars) (pos (app p a)) (pos (app p b)) (neg pa))\n"
        "(clause (vars (x i)) (neg (app p x)) (pos pa))");
    expect(!is_blocked(n, 0, 0) && !is_blocked(n, 0, 2));
  }

  // Pure and quasipure literal elimination outcomes.
  expect(run_ple(ple_set()).set.clauses.empty());
  expect(run_qle(ple_set()).set.clauses.empty());
  {
    ClauseSet n = chain_set();
    QleResult ple = run_ple(n);
    expect(clause_set_equal_upto_alpha(ple.set.clauses, n.clauses) &&
           run_qle(n).set.clauses.empty());
  }
  {
    ClauseSet n = deep_pair_set();
    expect(run_qle(n).set.clauses.empty() &&
           !is_quasipure({"p"}, {{"p", true}}, n) &&
           !is_quasipure({"q"}, {{"q", false}}, n));
  }

  // Congruence closure sees through applications but not lambdas.
  expect(cc_valid(
      clause1("(clause (vars) (neq a b) (neg (app q a)) (pos (app q b)))")));
  {
    ClauseSet n = parse_problem(
        "(type i 0)\n(sym a i)\n(sym b i)\n"
        "(sym qq (-> (-> (-> i i) i) o))\n"
        "(clause (vars) (neq a b) "
        "(neg (app qq (lam (x (-> i i)) (app x a)))) "
        "(pos (app qq (lam (x (-> i i)) (app x b)))))");
    expect(!cc_valid(n.clauses[0]));
  }

  detail = std::to_string(idx - bad) + " of " + std::to_string(idx) +
           " goldens hold" + (bad ? " (failing: " + failed + ")" : "");
  return bad == 0;
}

// Applies one technique by name; used by the fuzz criteria.
ClauseSet apply_technique(const std::string& t, const ClauseSet& n) {
  if (t == "hlbe") return hlbe_simplify(n, 8).set;
  if (t == "spe") return run_pe(n, PeMode::SpeOnly, LLONG_MAX, 8).set;
  if (t == "dpe") return run_pe(n, PeMode::DpeOnly, LLONG_MAX, 8).set;
  if (t == "ppe") return run_pe(n, PeMode::Portfolio, LLONG_MAX, 8).set;
  if (t == "bce") return run_bce(n).set;
  if (t == "qle") return run_qle(n).set;
  return run_ple(n).set;
}

const std::vector<std::string> kTechniques = {"hlbe", "spe", "dpe", "ppe",
                                              "bce",  "qle", "ple"};

bool equisat_fuzz(std::string& detail) {
  std::mt19937 rng(101);
  int mismatches = 0, runs = 0;
  for (int round = 0; round < 1000; ++round) {
    ClauseSet n = gen_prop_set(rng);
    bool before = ground_prop_sat(n);
    for (auto& t : kTechniques) {
      ++runs;
      if (ground_prop_sat(apply_technique(t, n)) != before) ++mismatches;
    }
  }
  for (int round = 0; round < 200; ++round) {
    ClauseSet n = gen_fo_set(rng);
    bool before = finite_model_sat(n, 3).has_value();
    for (auto& t : kTechniques) {
      ++runs;
      if (finite_model_sat(apply_technique(t, n), 3).has_value() != before)
        ++mismatches;
    }
  }
  detail = std::to_string(runs) + " technique runs, " +
           std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

bool no_p_left(std::string& detail) {
  std::mt19937 rng(202);
  int violations = 0, eliminations = 0;
  for (int round = 0; round < 1200; ++round) {
    ClauseSet n =
        round < 1000 ? gen_prop_set(rng) : gen_fo_set(rng);
    for (PeMode mode :
         {PeMode::SpeOnly, PeMode::DpeOnly, PeMode::Portfolio}) {
      PeResult r = run_pe(n, mode, LLONG_MAX, 8);
      for (auto& [sym, branch] : r.eliminated) {
        (void)branch;
        ++eliminations;
        if (symbol_occurs_in_set(sym, r.set) || r.set.sig.has_symbol(sym))
          ++violations;
      }
    }
  }
  detail = std::to_string(eliminations) + " eliminations, " +
           std::to_string(violations) + " residual occurrences";
  return eliminations > 0 && violations == 0;
}

bool confluence(std::string& detail) {
  std::mt19937 rng(303);
  int divergent = 0;
  for (int round = 0; round < 500; ++round) {
    ClauseSet n = gen_prop_set(rng);
    BceResult b0 = run_bce(n, 0);
    for (unsigned seed = 1; seed < 10; ++seed)
      if (!clause_set_equal_upto_alpha(b0.set.clauses,
                                       run_bce(n, seed).set.clauses))
        ++divergent;
  }
  for (int round = 0; round < 500; ++round) {
    ClauseSet n = gen_prop_set(rng);
    QleResult q0 = run_qle(n, 0);
    for (unsigned seed = 1; seed < 10; ++seed)
      if (!clause_set_equal_upto_alpha(q0.set.clauses,
                                       run_qle(n, seed).set.clauses))
        ++divergent;
  }
  detail = "1000 inputs x 10 orders, " + std::to_string(divergent) +
           " divergent";
  return divergent == 0;
}

bool qle_subsumes_ple(std::string& detail) {
  std::mt19937 rng(404);
  auto key = [](const Clause& c) {
    return clause_to_string(canonicalize_clause_vars(c));
  };
  int violations = 0;
  for (int round = 0; round < 700; ++round) {
    ClauseSet n = round % 2 == 0 ? gen_prop_set(rng) : gen_fo_set(rng);
    std::vector<std::string> ple_keys, qle_keys;
    for (auto& c : run_ple(n).set.clauses) ple_keys.push_back(key(c));
    for (auto& c : run_qle(n).set.clauses) qle_keys.push_back(key(c));
    std::sort(ple_keys.begin(), ple_keys.end());
    std::sort(qle_keys.begin(), qle_keys.end());
    if (!std::includes(ple_keys.begin(), ple_keys.end(), qle_keys.begin(),
                       qle_keys.end()))
      ++violations;
  }
  ClauseSet strict = chain_set();
  bool strict_ok = run_qle(strict).clauses_removed >
                   run_ple(strict).clauses_removed;
  detail = std::to_string(violations) + " subset violations, strict gap " +
           (strict_ok ? "holds" : "missing");
  return violations == 0 && strict_ok;
}

bool encoder_coherence(std::string& detail) {
  std::mt19937 rng(505);
  int disagreements = 0, bad_witnesses = 0;
  for (int round = 0; round < 600; ++round) {
    ClauseSet n = round % 2 == 0 ? gen_prop_set(rng, 4, 8) : gen_fo_set(rng);
    std::vector<std::string> preds;
    for (auto& p : n.sig.predicate_symbols())
      if (symbol_occurs_in_set(p, n)) preds.push_back(p);
    bool exists = false;
    size_t k = preds.size();
    for (unsigned sel = 1; sel < (1u << k) && !exists; ++sel)
      for (unsigned pol = 0; pol < (1u << k) && !exists; ++pol) {
        std::vector<std::string> p_set;
        PolarityMap m;
        for (size_t i = 0; i < k; ++i)
          if (sel & (1u << i)) {
            p_set.push_back(preds[i]);
            m[preds[i]] = (pol >> i) & 1;
          }
        exists = is_quasipure(p_set, m, n);
      }
    auto found = find_quasipure_set(n);
    if (found.has_value() != exists) ++disagreements;
    if (found && !is_quasipure(found->p_set, found->m, n)) ++bad_witnesses;
  }
  detail = "600 inputs, " + std::to_string(disagreements) +
           " disagreements, " + std::to_string(bad_witnesses) +
           " bad witnesses";
  return disagreements == 0 && bad_witnesses == 0;
}

bool determinism(std::string& detail) {
  std::vector<ClauseSet> corpus;
  std::mt19937 rng(606);
  for (int i = 0; i < 25; ++i) corpus.push_back(gen_prop_set(rng));
  for (int i = 0; i < 25; ++i) corpus.push_back(gen_fo_set(rng));
  corpus.push_back(choice_set());
  corpus.push_back(ple_set());
  corpus.push_back(deep_pair_set());

  std::string first;
  for (int run = 0; run < 5; ++run) {
    std::string all;
    for (auto& n : corpus) {
      PipelineResult r = run_pipeline(n, PipelineConfig{});
      r.report.wall_ms = 0;  // the only run-dependent report field
      all += print_problem(r.set);
      all += emit_report(r.report, "json");
      all += emit_report(r.report, "text");
    }
    if (run == 0)
      first = all;
    else if (all != first) {
      detail = "run " + std::to_string(run) + " differs";
      return false;
    }
  }
  detail = "5 runs over " + std::to_string(corpus.size()) +
           " problems byte-identical";
  return true;
}

bool growth_guard(std::string& detail) {
  std::string src;
  const char* cs[] = {"a", "b", "c", "d", "e"};
  for (auto* k : cs)
    src += std::string("(clause (vars) (pos (app p ") + k +
           ")) (pos (app q " + k + ")))\n";
  for (auto* k : cs)
    src += std::string("(clause (vars) (neg (app p ") + k +
           ")) (pos (app r " + k + ")))\n";
  ClauseSet n = parse_with_prelude(src);
  bool refused = ppe(n, "p", 0).branch == PeBranch::NotApplicable;
  PpeOutcome wide = ppe(n, "p", LLONG_MAX);
  bool proceeded = wide.branch == PeBranch::Spe &&
                   !symbol_occurs_in_set("p", wide.set);
  detail = std::string("K_tol=0 ") + (refused ? "refused" : "accepted") +
           ", unlimited " + (proceeded ? "eliminated p" : "failed");
  return refused && proceeded;
}

}  // namespace

int main() {
  auto run = [&](const char* name, bool (*check)(std::string&),
                 bool timed = false) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double ms = ms_since(t0);
    if (timed) {
      detail += ", " + std::to_string(ms) + " ms";
      ok = ok && ms < 1000.0;
    }
    verdict(name, ok, detail);
  };

  run("golden transformations", golden_examples, true);
  run("equisatisfiability fuzzing", equisat_fuzz);
  run("no predicate left after elimination", no_p_left);
  run("order-independent fixpoints", confluence);
  run("quasipure subsumes pure elimination", qle_subsumes_ple);
  run("encoder matches exhaustive checker", encoder_coherence);
  run("deterministic pipeline output", determinism);
  run("growth guard on quadratic elimination", growth_guard);

  return failures == 0 ? 0 : 1;
}
