#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "common.hpp"
#include "fuzz_common.hpp"
#include "hoprep/cc.hpp"
#include "hoprep/modelcheck.hpp"

using namespace hoprep;
using hoprep::test::clause1;
using hoprep::test::parse_with_prelude;

TEST_CASE("tautology verdicts") {
  // Frozen variable: asserting a = z and z != a contradicts immediately.
  CHECK(cc_valid(clause1("(clause (vars (z i)) (neq a z) (eq z a))")));
  // Congruence through a predicate atom.
  CHECK(cc_valid(
      clause1("(clause (vars) (neq a b) (neg (app q a)) (pos (app q b)))")));
  CHECK(cc_valid(
      clause1("(clause (vars (x i)) (pos (app q x)) (neg (app q x)))")));
  CHECK(!cc_valid(clause1("(clause (vars) (pos (app q a)) (neg (app q b)))")));
  CHECK(!cc_valid(clause1("(clause (vars (x i) (y i)) (pos (app q x)) "
                          "(neg (app q y)))")));
}

TEST_CASE("lambdas are opaque") {
  ClauseSet n = parse_problem(
      "(type i 0)\n(sym a i)\n(sym b i)\n(sym qq (-> (-> (-> i i) i) o))\n"
      "(clause (vars) (neq a b) (neg (app qq (lam (x (-> i i)) (app x a)))) "
      "(pos (app qq (lam (x (-> i i)) (app x b)))))\n"
      "(clause (vars) (neg (app qq (lam (x (-> i i)) (app x a)))) "
      "(pos (app qq (lam (y (-> i i)) (app y a)))))\n"
      "(clause (vars) (eq (lam (x (-> i i)) (app x a)) "
      "(lam (z (-> i i)) (app z a))))\n");
  // a = b does not reach inside an opaque lambda.
  CHECK(!cc_valid(n.clauses[0]));
  // Alpha-equivalent lambdas share one opaque constant.
  CHECK(cc_valid(n.clauses[1]));
  CHECK(cc_valid(n.clauses[2]));
}

TEST_CASE("quantified subterms are opaque") {
  ClauseSet n = parse_with_prelude(
      "(clause (vars) (neg (app (inst all i) (lam (x i) (app p x)))) "
      "(pos (app (inst all i) (lam (y i) (app p y)))))");
  CHECK(cc_valid(n.clauses[0]));
}

TEST_CASE("ground unsat by propositional abstraction") {
  CHECK(cc_ground_unsat(
      parse_with_prelude("(clause (vars) (pos (app q c)))\n"
                         "(clause (vars) (neg (app q c)))")));
  CHECK(!cc_ground_unsat(parse_with_prelude("(clause (vars) (pos (app q c)))")));
  // Distinct atoms abstract to distinct variables, so equational reasoning
  // is not available here: this set is unsat but the abstraction is sat.
  CHECK(!cc_ground_unsat(
      parse_with_prelude("(clause (vars) (eq a b))\n"
                         "(clause (vars) (neq (app f a) (app f b)))")));
  // Clausified environment with a chain of binary implications.
  CHECK(cc_ground_unsat(parse_with_prelude(
      "(clause (vars) (pos pa))\n"
      "(clause (vars) (neg pa) (pos pb))\n"
      "(clause (vars) (neg pb) (pos pc))\n"
      "(clause (vars) (neg pc))")));
  CHECK(!cc_ground_unsat(parse_with_prelude(
      "(clause (vars) (pos pa) (pos pb))\n"
      "(clause (vars) (neg pa) (neg pb))")));
}

TEST_CASE("adding literals preserves validity") {
  std::mt19937 rng(11);
  Signature sig = hoprep::test::fo_signature();
  int seen = 0;
  for (int round = 0; round < 4000 && seen < 50; ++round) {
    Clause c = hoprep::test::gen_fo_clause(rng, sig);
    if (!cc_valid(c)) continue;
    ++seen;
    Clause wider = c;
    wider.lits.push_back(hoprep::test::gen_fo_clause(rng, sig, 1).lits[0]);
    CHECK(cc_valid(wider));
  }
  CHECK(seen == 50);
}

TEST_CASE("validity is sound against finite model search") {
  std::mt19937 rng(20240812);
  Signature sig = hoprep::test::fo_signature();
  int valid = 0;
  for (int round = 0; round < 10000; ++round) {
    Clause c = hoprep::test::gen_fo_clause(rng, sig);
    if (!cc_valid(c)) continue;
    ++valid;
    // A tautology's literal-wise complement must have no model.
    ClauseSet comp;
    comp.sig = sig;
    for (const Literal& l : c.lits) {
      Clause unit;
      unit.lits.push_back(Literal{!l.positive, l.lhs, l.rhs});
      comp.clauses.push_back(std::move(unit));
    }
    CHECK(!finite_model_sat(comp, 3).has_value());
  }
  CHECK(valid > 100);  // the corpus exercises the positive branch
}

TEST_CASE("ground unsat is sound against finite model search") {
  std::mt19937 rng(20240813);
  Signature sig = hoprep::test::fo_signature();
  int unsat = 0;
  for (int round = 0; round < 2000; ++round) {
    // Short clauses make contradictions common enough to exercise.
    ClauseSet n;
    n.sig = sig;
    int m = 4 + static_cast<int>(rng() % 7);
    for (int i = 0; i < m; ++i)
      n.clauses.push_back(hoprep::test::gen_fo_clause(rng, sig, 2));
    if (!cc_ground_unsat(n)) continue;
    ++unsat;
    CHECK(!finite_model_sat(n, 3).has_value());
  }
  CHECK(unsat > 50);
}
