#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "hoprep/modelcheck.hpp"

using namespace hoprep;
using hoprep::test::parse_with_prelude;

TEST_CASE("propositional verdicts") {
  CHECK(!ground_prop_sat(parse_with_prelude(
      "(clause (vars) (pos pa))\n(clause (vars) (neg pa))")));
  CHECK(ground_prop_sat(parse_with_prelude(
      "(clause (vars) (neg pa) (pos pb))\n"
      "(clause (vars) (neg pb) (pos pc))\n"
      "(clause (vars) (pos pa) (pos pb) (pos pc))")));
  // Compound ground atoms are fine; distinct atoms stay independent.
  CHECK(ground_prop_sat(parse_with_prelude(
      "(clause (vars) (pos (app p a)))\n"
      "(clause (vars) (neg (app p a)) (pos (app p (app f a))))")));
  CHECK(!ground_prop_sat(parse_with_prelude(
      "(clause (vars) (pos (app p a)))\n"
      "(clause (vars) (neg (app p a)))")));
  CHECK(ground_prop_sat({}));
}

TEST_CASE("unsupported fragments") {
  CHECK_THROWS_AS(ground_prop_sat(parse_with_prelude(
                      "(clause (vars (x i)) (pos (app p x)))")),
                  FragmentUnsupported);
  CHECK_THROWS_AS(
      ground_prop_sat(parse_with_prelude("(clause (vars) (eq a b))")),
      FragmentUnsupported);
  CHECK_THROWS_AS(ground_prop_sat(parse_with_prelude(
                      "(clause (vars) (pos (app p (app (app h a) b))) "
                      "(pos (app (inst all i) (lam (x i) (app p x)))))")),
                  FragmentUnsupported);
  // Boolean proper subterm under a non-logical head.
  ClauseSet n = parse_problem(
      "(type i 0)\n(sym sel (-> o o))\n(sym pa o)\n"
      "(clause (vars) (pos (app sel pa)))");
  CHECK_THROWS_AS(ground_prop_sat(n), FragmentUnsupported);
}

TEST_CASE("finite model verdicts") {
  CHECK(finite_model_sat(parse_with_prelude("(clause (vars) (eq a b))\n"
                                            "(clause (vars) (eq b c))"),
                         3) == 1);
  CHECK(!finite_model_sat(parse_with_prelude("(clause (vars) (eq a b))\n"
                                             "(clause (vars) (neq a b))"),
                          3)
             .has_value());
  // f a != a forces at least two elements.
  CHECK(finite_model_sat(
            parse_with_prelude("(clause (vars) (neq (app f a) a))"), 3) == 2);
  CHECK(!finite_model_sat(parse_with_prelude("(clause (vars) (pos (app p a)))\n"
                                             "(clause (vars) (neg (app p a)))"),
                          3)
             .has_value());
  // Three constants can be forced pairwise distinct but not four terms.
  CHECK(finite_model_sat(parse_with_prelude("(clause (vars) (neq a b))\n"
                                            "(clause (vars) (neq b c))\n"
                                            "(clause (vars) (neq a c))"),
                         3) == 3);
  CHECK(!finite_model_sat(
             parse_with_prelude("(clause (vars) (neq a b))\n"
                                "(clause (vars) (neq b c))\n"
                                "(clause (vars) (neq a c))\n"
                                "(clause (vars) (neq (app f a) a))\n"
                                "(clause (vars) (neq (app f a) b))\n"
                                "(clause (vars) (neq (app f a) c))"),
             3)
             .has_value());
}

TEST_CASE("finite model handles predicates over grounded instances") {
  // Ground instances of p x | -p (f x) over {a, f a} stay satisfiable.
  ClauseSet n = parse_with_prelude(
      "(clause (vars) (pos (app p a)) (neg (app p (app f a))))\n"
      "(clause (vars) (pos (app p (app f a))) "
      "(neg (app p (app f (app f a)))))\n"
      "(clause (vars) (pos (app p a)))");
  CHECK(finite_model_sat(n, 3).has_value());
}

TEST_CASE("finite model rejects unsupported shapes") {
  CHECK_THROWS_AS(finite_model_sat(parse_with_prelude(
                      "(clause (vars (x i)) (pos (app p x)))"),
                  3),
                  FragmentUnsupported);
  CHECK_THROWS_AS(finite_model_sat(parse_with_prelude(
                      "(clause (vars) (eq (lam (x i) x) (lam (x i) x)))"),
                  3),
                  FragmentUnsupported);
  // Binary function symbols are outside the enumerated vocabulary.
  CHECK_THROWS_AS(finite_model_sat(parse_with_prelude(
                      "(clause (vars) (eq (app (app h a) b) a))"),
                  3),
                  FragmentUnsupported);
}
