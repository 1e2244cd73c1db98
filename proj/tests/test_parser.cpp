#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"

using namespace hoprep;
using hoprep::test::parse_with_prelude;

TEST_CASE("declarations") {
  ClauseSet n = parse_problem(
      "(type i 0)\n(type list 1)\n(sym nil (pi (A) (list A)))\n"
      "(sym cons (pi (A) (-> A (list A) (list A))))\n");
  CHECK(n.sig.type_ctors.at("list") == 1);
  const TypeScheme& s = n.sig.scheme("cons");
  CHECK(s.vars == std::vector<std::string>{"A"});
  auto [args, res] = strip_fun(s.body);
  CHECK(args.size() == 2);
  CHECK(type_to_string(res) == "(list A)");
}

TEST_CASE("clauses with binders and instances") {
  ClauseSet n = parse_problem(
      "(type i 0)\n(sym a i)\n(sym sel (-> (-> i o) i))\n(sym p (-> i o))\n"
      "(clause (vars) (pos (app p (app sel (lam (w i) (app (inst eqb i) w "
      "a))))))");
  REQUIRE(n.clauses.size() == 1);
  CHECK(term_to_string(n.clauses[0].lits[0].lhs) ==
        "p (sel (lam x0. eqb<i> x0 a))");
}

TEST_CASE("undeclared names in clause types are clause type variables") {
  ClauseSet n = parse_problem(
      "(sym id (pi (A) (-> A A)))\n"
      "(clause (vars (x B)) (eq (app (inst id B) x) x))");
  auto tvs = clause_type_vars(n.clauses[0]);
  CHECK(tvs == std::vector<std::string>{"B"});
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("unknown identifier") {
    try {
      parse_problem("(clause (vars) (pos zig))");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("zig") != std::string::npos);
      CHECK(e.span().line == 1);
    }
  }
  SUBCASE("missing type arguments") {
    CHECK_THROWS_WITH_AS(parse_problem("(clause (vars) (pos (app all all)))"),
                         doctest::Contains("missing type arguments"),
                         ParseError);
  }
  SUBCASE("duplicate symbol") {
    CHECK_THROWS_AS(parse_problem("(type i 0)\n(sym a i)\n(sym a i)"),
                    ParseError);
  }
  SUBCASE("reserved name") {
    CHECK_THROWS_AS(parse_problem("(sym not o)"), ParseError);
  }
  SUBCASE("type constructor arity") {
    CHECK_THROWS_AS(parse_problem("(type list 1)\n(sym x list)"), ParseError);
  }
  SUBCASE("ill-typed application") {
    CHECK_THROWS_AS(
        parse_problem("(type i 0)\n(sym a i)\n(clause (vars) (pos (app a a)))"),
        ParseError);
  }
  SUBCASE("equation sides of different types") {
    CHECK_THROWS_AS(parse_problem("(type i 0)\n(sym a i)\n"
                                  "(clause (vars) (eq a true))"),
                    ParseError);
  }
  SUBCASE("pos literal must be Boolean") {
    CHECK_THROWS_AS(
        parse_problem("(type i 0)\n(sym a i)\n(clause (vars) (pos a))"),
        ParseError);
  }
}

TEST_CASE("comments and whitespace") {
  ClauseSet n = parse_problem(
      "; leading comment\n(type i 0) ; trailing\n\n(sym a i)\n");
  CHECK(n.sig.has_symbol("a"));
}

TEST_CASE("printer round trip") {
  std::string src = hoprep::test::prelude() +
                    "(clause (vars (x i) (y (-> i o))) (neg (app y x)) "
                    "(eq (app f x) a))\n"
                    "(clause (vars) (pos (app q2 a b)))\n";
  ClauseSet n = parse_problem(src);
  std::string printed = print_problem(n);
  ClauseSet again = parse_problem(printed);
  CHECK(clause_set_equal_upto_alpha(n.clauses, again.clauses));
  // The printer is a fixpoint after one canonicalizing pass.
  CHECK(print_problem(again) == printed);
}

TEST_CASE("printer round-trips polymorphic problems") {
  std::string src =
      "(type i 0)\n(sym pp (pi (A) (-> A o)))\n(sym a i)\n"
      "(clause (vars (x B)) (pos (app (inst pp B) x)))\n"
      "(clause (vars) (neg (app (inst pp i) a)))\n";
  ClauseSet n = parse_problem(src);
  ClauseSet again = parse_problem(print_problem(n));
  CHECK(clause_set_equal_upto_alpha(n.clauses, again.clauses));
}

TEST_CASE("printer uses predicate literal sugar") {
  ClauseSet n = parse_with_prelude("(clause (vars) (pos pa) (neg (app p a)))");
  std::string printed = print_problem(n);
  CHECK(printed.find("(pos pa)") != std::string::npos);
  CHECK(printed.find("(neg (app p a))") != std::string::npos);
}
